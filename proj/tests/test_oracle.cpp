#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "supchar/oracle.hpp"

using namespace supchar;

TEST(Oracle, EnumeratesAllOfU) {
  struct Case {
    Family fam;
    std::uint64_t order;
  };
  for (const Case& c : {Case{Family::D, 9}, Case{Family::C, 81}, Case{Family::B, 81}}) {
    const GroupModel g(c.fam, 2, FieldCtx(3, 1));
    const BruteForce bf(g, 10000);
    EXPECT_EQ(bf.order(), c.order);
    std::set<std::vector<FieldElement>> distinct;
    for (std::uint64_t k = 0; k < bf.order(); ++k) {
      distinct.insert(bf.element(k).a);
      EXPECT_EQ(bf.code_of(bf.element(k)), k);
      EXPECT_EQ(g.mul(bf.element(k), bf.inverse(k)), g.identity());
    }
    EXPECT_EQ(distinct.size(), c.order);
  }
}

TEST(Oracle, RefusesLargeGroups) {
  const GroupModel g(Family::C, 3, FieldCtx(3, 1));
  EXPECT_THROW(BruteForce(g, 1000), std::length_error);
}

TEST(Oracle, AbelianD2HasSingletonClasses) {
  const GroupModel g(Family::D, 2, FieldCtx(3, 1));
  const BruteForce bf(g, 10000);
  EXPECT_EQ(bf.class_count(), 9U);
  for (std::uint64_t x = 0; x < 9; ++x) {
    for (std::uint64_t y = 0; y < 9; ++y) EXPECT_EQ(bf.product(x, y), bf.product(y, x));
  }
}

TEST(Oracle, ConjugacyClassesPartitionU) {
  const GroupModel g(Family::C, 2, FieldCtx(3, 1));
  const BruteForce bf(g, 10000);
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < bf.class_count(); ++c) {
    total += bf.conj_class(c).size();
    for (std::uint64_t code : bf.conj_class(c)) EXPECT_EQ(bf.conj_class_of(code), c);
  }
  EXPECT_EQ(total, 81U);
  // The class of the identity is a singleton.
  EXPECT_EQ(bf.conj_class(bf.conj_class_of(bf.code_of(g.identity()))).size(), 1U);
}

TEST(Oracle, SuperclassesAreUnionsOfConjugacyClasses) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 2, FieldCtx(3, 1));
    const BruteForce bf(g, 10000);
    for (std::size_t c = 0; c < bf.class_count(); ++c) {
      const auto& members = bf.conj_class(c);
      const BasicPair cls = superclass_of(g, bf.element(members.front()));
      for (std::uint64_t code : members) EXPECT_EQ(superclass_of(g, bf.element(code)), cls);
    }
  }
}

TEST(Oracle, FullOrbitMatchesClass) {
  const GroupModel g(Family::B, 2, FieldCtx(3, 1));
  const BruteForce bf(g, 10000);
  for (std::uint64_t code = 0; code < bf.order(); code += 5) {
    auto orbit = bf.full_conjugation_orbit(code);
    std::sort(orbit.begin(), orbit.end());
    auto cls = bf.conj_class(bf.conj_class_of(code));
    std::sort(cls.begin(), cls.end());
    EXPECT_EQ(orbit, cls);
  }
}

TEST(Oracle, TrivialInductionIsTheRegularCount) {
  const GroupModel g(Family::C, 2, FieldCtx(3, 1));
  const BruteForce bf(g, 10000);
  const auto values = bf.induce_on_classes(BasicPair{});
  for (std::size_t c = 0; c < bf.class_count(); ++c) {
    EXPECT_EQ(values[c], CycNumber::from_rational(3, 1));
  }
}

TEST(Oracle, LiteralInductionAgreesWithClassInduction) {
  const GroupModel g(Family::C, 2, FieldCtx(3, 1));
  const BruteForce bf(g, 10000);
  const auto pairs = enumerate_basic_pairs(g.roots(), g.field());
  for (std::size_t k = 0; k < pairs.size(); k += 3) {
    const auto values = bf.induce_on_classes(pairs[k]);
    for (std::uint64_t code = 0; code < bf.order(); code += 4) {
      EXPECT_EQ(bf.induce_literal(pairs[k], code), values[bf.conj_class_of(code)]);
    }
  }
}

TEST(Oracle, SubgroupOrders) {
  const GroupModel g(Family::C, 2, FieldCtx(3, 1));
  const BruteForce bf(g, 10000);
  EXPECT_EQ(bf.subgroup_order({}), 81U);
  // U_{2e1} fixes z_{1,2} = 0.
  EXPECT_EQ(bf.subgroup_order({g.roots().root_index(parse_root("2e1"))}), 27U);
}

TEST(Oracle, TwoSidedReductionOfRepresentatives) {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    const GroupModel g(fam, 3, FieldCtx(3, 1));
    for (const auto& pair : enumerate_basic_pairs(g.roots(), g.field())) {
      const EntryPair reduced = reduce_two_sided(g, g.sub(representative(g, pair), g.identity()));
      const auto back = root_pair_of(g, reduced);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, pair) << pair_to_string(g.roots(), pair);
    }
  }
}
