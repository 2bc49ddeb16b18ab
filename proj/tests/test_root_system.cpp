#include <set>

#include <gtest/gtest.h>

#include "supchar/root_system.hpp"

using namespace supchar;

namespace {

// Positive roots as coordinate vectors in Z^n, built independently.
std::set<std::vector<int>> positive_vectors(Family family, int n) {
  std::set<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> minus(n, 0), plus(n, 0);
      minus[i] = 1, minus[j] = -1;
      plus[i] = 1, plus[j] = 1;
      out.insert(minus);
      out.insert(plus);
    }
    std::vector<int> v(n, 0);
    if (family == Family::C) v[i] = 2, out.insert(v);
    if (family == Family::B) v[i] = 1, out.insert(v);
  }
  return out;
}

std::vector<int> as_vector(const Root& r, int n) {
  std::vector<int> v(n, 0);
  switch (r.kind) {
    case RootKind::Minus:
      v[r.i - 1] = 1, v[r.j - 1] = -1;
      break;
    case RootKind::Plus:
      v[r.i - 1] = 1, v[r.j - 1] = 1;
      break;
    case RootKind::Long:
      v[r.i - 1] = 2;
      break;
    case RootKind::Short:
      v[r.i - 1] = 1;
      break;
  }
  return v;
}

}  // namespace

TEST(RootSystem, PositiveRootsMatchVectorModel) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= 4; ++n) {
      RootSystem rs(fam, n);
      std::set<std::vector<int>> got;
      for (const auto& r : rs.roots()) got.insert(as_vector(r, n));
      EXPECT_EQ(got, positive_vectors(fam, n)) << family_letter(fam) << n;
      EXPECT_EQ(got.size(), rs.size());
    }
  }
}

TEST(RootSystem, MirrorOrderAndSize) {
  RootSystem b(Family::B, 2);
  EXPECT_EQ(b.indices(), (std::vector<int>{1, 2, 0, -2, -1}));
  EXPECT_EQ(b.m(), 5);
  RootSystem c(Family::C, 3);
  EXPECT_EQ(c.indices(), (std::vector<int>{1, 2, 3, -3, -2, -1}));
  EXPECT_TRUE(c.mirror_less(3, -3));
  EXPECT_TRUE(c.mirror_less(-2, -1));
  EXPECT_EQ(c.pos(-1), 5);
  EXPECT_THROW(c.pos(0), std::out_of_range);
}

TEST(RootSystem, EntriesAreStrictlyUpperAndMirrorClosed) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    RootSystem rs(fam, 3);
    std::set<std::pair<int, int>> seen;
    for (std::size_t idx = 0; idx < rs.size(); ++idx) {
      const auto& es = rs.entries(idx);
      for (const auto& e : es) {
        EXPECT_TRUE(rs.mirror_less(e.row, e.col));
        EXPECT_TRUE(seen.insert({e.row, e.col}).second) << "entry in two roots";
        const Entry mirror{-e.col, -e.row};
        EXPECT_EQ(rs.root_of_entry(mirror), std::optional<std::size_t>(idx));
      }
      EXPECT_EQ(rs.rep(idx).row, rs.root(idx).i);
      EXPECT_EQ(rs.basis_sign(rs.rep(idx)), 1);
    }
    // D and B have no (i,-i) entries; C has each once.
    for (int i = 1; i <= 3; ++i) {
      EXPECT_EQ(rs.root_of_entry({i, -i}).has_value(), fam == Family::C);
    }
    EXPECT_EQ(rs.all_entries().size(), seen.size());
  }
}

TEST(RootSystem, RootsSortedByRepresentativeEntryOrder) {
  RootSystem rs(Family::C, 3);
  for (std::size_t k = 0; k + 1 < rs.size(); ++k) EXPECT_TRUE(rs.entry_less(rs.rep(k), rs.rep(k + 1)));
}

TEST(RootSystem, TextRoundTrip) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    RootSystem rs(fam, 3);
    for (const auto& r : rs.roots()) EXPECT_EQ(parse_root(root_to_string(r)), r);
  }
  EXPECT_EQ(root_to_string(parse_root("2e1")), "2e1");
  EXPECT_EQ(root_to_string(parse_root("e1-e2")), "e1-e2");
  EXPECT_THROW(parse_root("e2-e1"), std::invalid_argument);
  EXPECT_THROW(parse_root("3e1"), std::invalid_argument);
  EXPECT_THROW(RootSystem(Family::C, 2).root_index(parse_root("e1")), std::invalid_argument);
  EXPECT_EQ(parse_family("c"), Family::C);
  EXPECT_THROW(parse_family("A"), std::invalid_argument);
}

TEST(RootSystem, BasicSubsetsUseEachRowAndColumnOnce) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    RootSystem rs(fam, 3);
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1U << rs.size()); ++mask) {
      std::vector<std::size_t> roots;
      for (std::size_t k = 0; k < rs.size(); ++k) {
        if (mask >> k & 1U) roots.push_back(k);
      }
      std::set<int> rows, cols;
      bool basic = true;
      for (const auto& e : rs.entry_set(roots)) basic = basic && rows.insert(e.row).second && cols.insert(e.col).second;
      EXPECT_EQ(rs.is_basic(roots), basic);
      count += basic;
    }
    EXPECT_EQ(rs.basic_subsets().size(), count);
  }
}

TEST(RootSystem, BasicPairCounts) {
  // Sum over basic subsets D of (q-1)^|D|.
  auto count = [](Family fam, int n, unsigned p) {
    RootSystem rs(fam, n);
    return enumerate_basic_pairs(rs, FieldCtx(p, 1)).size();
  };
  EXPECT_EQ(count(Family::C, 2, 3), 17U);
  EXPECT_EQ(count(Family::D, 2, 3), 5U);
  RootSystem rs(Family::B, 2);
  std::size_t expected = 0;
  for (const auto& d : rs.basic_subsets()) expected += std::size_t{1} << d.size();
  EXPECT_EQ(count(Family::B, 2, 3), expected);
}

TEST(RootSystem, PairText) {
  RootSystem rs(Family::C, 2);
  EXPECT_EQ(pair_to_string(rs, BasicPair{}), "{}");
  BasicPair p{{rs.root_index(parse_root("e1-e2")), rs.root_index(parse_root("2e2"))}, {1, 2}};
  std::sort(p.roots.begin(), p.roots.end());
  const std::string text = pair_to_string(rs, p);
  EXPECT_NE(text.find("e1-e2:"), std::string::npos);
  EXPECT_NE(text.find("2e2:"), std::string::npos);
}
