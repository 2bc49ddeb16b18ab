#include <set>

#include <gtest/gtest.h>

#include "supchar/group_model.hpp"

using namespace supchar;

namespace {

// The invariant form in mirror order: antidiagonal, with the sign flipped on
// the lower half for the symplectic family.
Matrix form_matrix(const GroupModel& g) {
  const RootSystem& rs = g.roots();
  Matrix f(g.m());
  for (int r = 0; r < g.m(); ++r) {
    const int idx = rs.index_at(r);
    const int c = rs.pos(-idx);
    f.at(r, c) = rs.family() == Family::C && idx < 0 ? g.field().neg(1) : 1;
  }
  return f;
}

bool preserves_form(const GroupModel& g, const Matrix& z) {
  const Matrix f = form_matrix(g);
  return g.mul(g.mul(g.transpose(z), f), z) == f;
}

bool annihilates_form(const GroupModel& g, const Matrix& a) {
  const Matrix f = form_matrix(g);
  const Matrix s = g.add(g.mul(g.transpose(a), f), g.mul(f, a));
  return s == g.zero();
}

// Every upper unitriangular matrix over F_q with the given size, by code.
Matrix unitriangular_from_code(const GroupModel& g, std::uint64_t code) {
  Matrix z = g.identity();
  const std::uint32_t q = g.field().q();
  for (int r = 0; r < g.m(); ++r) {
    for (int c = r + 1; c < g.m(); ++c) {
      z.at(r, c) = static_cast<FieldElement>(code % q);
      code /= q;
    }
  }
  return z;
}

std::set<std::vector<FieldElement>> image_of_bijection(const GroupModel& g) {
  std::set<std::vector<FieldElement>> out;
  for (std::uint64_t code = 0; code < *g.order(); ++code) out.insert(g.group_from_coords(g.coords_from_code(code)).a);
  return out;
}

}  // namespace

class GroupModelFamilies : public ::testing::TestWithParam<std::tuple<Family, int, unsigned>> {};

TEST_P(GroupModelFamilies, ImageIsExactlyTheFormPreservingUnitriangularGroup) {
  auto [fam, n, p] = GetParam();
  const GroupModel g(fam, n, FieldCtx(p, 1));
  const int free_entries = g.m() * (g.m() - 1) / 2;
  std::uint64_t total = 1;
  for (int k = 0; k < free_entries; ++k) total *= p;
  std::set<std::vector<FieldElement>> oracle;
  for (std::uint64_t code = 0; code < total; ++code) {
    const Matrix z = unitriangular_from_code(g, code);
    const bool member = preserves_form(g, z);
    EXPECT_EQ(!g.group_violation(z).has_value(), member);
    if (member) oracle.insert(z.a);
  }
  EXPECT_EQ(oracle.size(), *g.order());
  EXPECT_EQ(image_of_bijection(g), oracle);
}

INSTANTIATE_TEST_SUITE_P(Small, GroupModelFamilies,
                         ::testing::Values(std::make_tuple(Family::C, 2, 3U), std::make_tuple(Family::D, 2, 3U),
                                           std::make_tuple(Family::B, 2, 3U), std::make_tuple(Family::C, 1, 5U),
                                           std::make_tuple(Family::B, 1, 5U), std::make_tuple(Family::D, 2, 5U)));

TEST(GroupModel, LieAlgebraAnnihilatesForm) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 3, FieldCtx(3, 1));
    for (std::size_t idx = 0; idx < g.rank(); ++idx) {
      const LieElement a = g.lie_basis(idx);
      EXPECT_TRUE(annihilates_form(g, a)) << family_letter(fam) << " root " << idx;
      EXPECT_FALSE(g.lie_violation(a).has_value());
    }
  }
}

TEST(GroupModel, BijectionRoundTrips) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 2, FieldCtx(5, 1));
    for (std::uint64_t code = 0; code < *g.order(); ++code) {
      const Coords c = g.coords_from_code(code);
      const LieElement a = g.lie_from_coords(c);
      EXPECT_EQ(g.coords_of(a), c);
      EXPECT_EQ(g.coords_code(c), code);
      const GroupElement z = g.group_from_lie(a);
      EXPECT_EQ(g.lie_from_group(z), a);
    }
  }
}

TEST(GroupModel, ClosedUnderProductsAndInverses) {
  const GroupModel g(Family::B, 2, FieldCtx(3, 1));
  for (std::uint64_t x = 0; x < *g.order(); x += 7) {
    const GroupElement zx = g.group_from_coords(g.coords_from_code(x));
    const GroupElement inv = g.group_inv(zx);
    EXPECT_EQ(g.mul(zx, inv), g.identity());
    for (std::uint64_t y = 0; y < *g.order(); y += 5) {
      const GroupElement zy = g.group_from_coords(g.coords_from_code(y));
      EXPECT_FALSE(g.group_violation(g.group_mul(zx, zy)).has_value());
      EXPECT_FALSE(g.group_violation(g.conjugate(zx, zy)).has_value());
    }
  }
}

TEST(GroupModel, RejectsNonMembers) {
  const GroupModel g(Family::C, 2, FieldCtx(3, 1));
  Matrix lower = g.identity();
  lower.at(2, 0) = 1;
  EXPECT_TRUE(g.group_violation(lower).has_value());
  Matrix lone = g.identity();
  lone.at(0, 1) = 1;  // e1-e2 without its mirror entry
  EXPECT_TRUE(g.group_violation(lone).has_value());
}

TEST(GroupModel, SubgroupOrdersMatchCounting) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 2, FieldCtx(3, 1));
    for (const auto& D : g.roots().basic_subsets()) {
      std::uint64_t count = 0;
      std::vector<GroupElement> members;
      for (std::uint64_t code = 0; code < *g.order(); ++code) {
        const GroupElement z = g.group_from_coords(g.coords_from_code(code));
        if (g.in_U_D(D, z)) {
          ++count;
          members.push_back(z);
        }
      }
      std::uint64_t expected = *g.order();
      for (int k = 0; k < g.index_exponent(D); ++k) expected /= 3;
      EXPECT_EQ(count, expected);
      // U_D is a subgroup.
      for (std::size_t a = 0; a < members.size(); a += 3) {
        for (std::size_t b = 0; b < members.size(); b += 3) {
          EXPECT_TRUE(g.in_U_D(D, g.mul(members[a], members[b])));
        }
      }
    }
  }
}

TEST(GroupModel, LambdaIsALinearCharacterOfUD) {
  const GroupModel g(Family::C, 2, FieldCtx(3, 1));
  const FieldCtx& f = g.field();
  for (const auto& pair : enumerate_basic_pairs(g.roots(), f)) {
    std::vector<GroupElement> members;
    for (std::uint64_t code = 0; code < *g.order(); ++code) {
      const GroupElement z = g.group_from_coords(g.coords_from_code(code));
      if (g.in_U_D(pair.roots, z)) members.push_back(z);
    }
    for (const auto& x : members) {
      for (const auto& y : members) {
        EXPECT_EQ(g.lambda_value(pair, g.mul(x, y)), g.lambda_value(pair, x) * g.lambda_value(pair, y));
      }
    }
  }
  const std::size_t long1 = g.roots().root_index(parse_root("2e1"));
  Coords c(g.rank(), 0);
  c[g.roots().root_index(parse_root("e1-e2"))] = 1;
  EXPECT_ANY_THROW(g.lambda_exponent(BasicPair{{long1}, {1}}, g.group_from_coords(c)));
}
