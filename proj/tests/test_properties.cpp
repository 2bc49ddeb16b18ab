#include <random>

#include <gtest/gtest.h>

#include "supchar/oracle.hpp"
#include "supchar/supercharacter.hpp"

using namespace supchar;

namespace {

constexpr int kTrials = 200;

CycNumber random_cyc(unsigned p, std::mt19937& rng) {
  std::vector<Rational> c(p - 1);
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(1 + rng() % 3));
  return CycNumber::from_coeffs(p, c);
}

GroupElement random_element(const GroupModel& g, std::mt19937_64& rng) {
  Coords c(g.rank());
  for (auto& x : c) x = static_cast<FieldElement>(rng() % g.field().q());
  return g.group_from_coords(c);
}

}  // namespace

TEST(Properties, CyclotomicRingLaws) {
  std::mt19937 rng(101);
  for (unsigned p : {3U, 5U, 7U}) {
    for (int trial = 0; trial < kTrials; ++trial) {
      const CycNumber a = random_cyc(p, rng), b = random_cyc(p, rng), c = random_cyc(p, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Properties, FieldLawsInLargerFields) {
  std::mt19937 rng(7);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 4}, {5, 3}, {7, 2}, {11, 2}}) {
    const FieldCtx f(p, e);
    for (int trial = 0; trial < kTrials; ++trial) {
      const FieldElement a = rng() % f.q(), b = rng() % f.q(), c = rng() % f.q();
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
      if (a != 0 && b != 0) EXPECT_EQ(f.eta(f.mul(a, b)), f.eta(a) * f.eta(b));
    }
  }
}

TEST(Properties, GroupLawsAtRandom) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 4, FieldCtx(5, 1));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < kTrials; ++trial) {
      const GroupElement x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
      EXPECT_FALSE(g.group_violation(x).has_value());
      EXPECT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
      EXPECT_FALSE(g.group_violation(g.group_mul(x, y)).has_value());
      EXPECT_EQ(g.group_from_lie(g.lie_from_group(x)), x);
    }
  }
}

TEST(Properties, RandomClassificationMatchesTwoSidedReduction) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    for (unsigned p : {3U, 5U}) {
      const GroupModel g(fam, 4, FieldCtx(p, 1));
      std::mt19937_64 rng(31 + p);
      for (int trial = 0; trial < kTrials; ++trial) {
        const GroupElement z = random_element(g, rng);
        const auto reduced = root_pair_of(g, reduce_two_sided(g, g.sub(z, g.identity())));
        ASSERT_TRUE(reduced.has_value());
        const BasicPair cls = superclass_of(g, z);
        EXPECT_EQ(cls, *reduced);
        EXPECT_TRUE(membership(g, cls, g.lie_from_group(z)));
      }
    }
  }
}

TEST(Properties, ClassificationIsConjugationInvariant) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 3, FieldCtx(7, 1));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < kTrials; ++trial) {
      const GroupElement x = random_element(g, rng), z = random_element(g, rng);
      EXPECT_EQ(superclass_of(g, g.conjugate(x, z)), superclass_of(g, z));
    }
  }
}

TEST(Properties, ValuesFactorAtRandom) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 4, FieldCtx(3, 1));
    const Supercharacters sc(g);
    const auto pairs = enumerate_basic_pairs(g.roots(), g.field());
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < kTrials; ++trial) {
      const BasicPair& chr = pairs[rng() % pairs.size()];
      const BasicPair& cls = pairs[rng() % pairs.size()];
      EXPECT_EQ(sc.value(chr, cls), sc.value_by_factors(chr, cls));
    }
  }
}
