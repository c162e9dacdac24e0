#include "antidiag/group.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace antidiag {
namespace {

using test::code_of;
using test::make;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_EQ(code_of([] { Permutation({0, 0, 1}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { Permutation({0, 3}); }), ErrorCode::InvalidPermutation);
}

TEST(Permutation, ComposesLeftToRight) {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  // Apply a first: 0 -> 1 -> 2, 1 -> 0, 2 -> 1.
  EXPECT_EQ((a * b).images(), (std::vector<std::uint32_t>{2, 0, 1}));
  EXPECT_EQ((b * a).images(), (std::vector<std::uint32_t>{1, 2, 0}));
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
  EXPECT_EQ((a * b).to_cycle_string(), "(0 2 1)");
}

TEST(CayleyTable, RejectsNonAssociativeLoop) {
  const std::vector<std::vector<ElementIndex>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(code_of([&] { Group::from_cayley_table(loop, {}, "loop"); }),
            ErrorCode::NotAssociative);
}

TEST(CayleyTable, RejectsNonLatinAndMissingIdentity) {
  EXPECT_EQ(code_of([] { Group::from_cayley_table({{0, 1}, {1, 1}}, {}, "bad"); }),
            ErrorCode::NotLatinSquare);
  EXPECT_EQ(code_of([] { Group::from_cayley_table({{0, 1}, {1}}, {}, "ragged"); }),
            ErrorCode::NotLatinSquare);
  EXPECT_EQ(code_of([] { Group::from_cayley_table({}, {}, "empty"); }), ErrorCode::NotLatinSquare);
  // a*b = a - b mod 3 is a Latin square with no two-sided identity.
  EXPECT_EQ(code_of([] { Group::from_cayley_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}, {}, "sub"); }),
            ErrorCode::NoIdentity);
}

TEST(CayleyTable, MovesIdentityToIndexZero) {
  // Z3 written with the identity as element 2.
  const Group g =
      Group::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"}, "Z3");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.label(0), "e");
  for (ElementIndex x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
  }
}

TEST(Closure, RespectsOrderCap) {
  const Permutation gens[] = {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                              Permutation::from_cycles(5, {{0, 1}})};
  Limits small;
  small.order_cap = 100;
  EXPECT_EQ(code_of([&] { from_permutation_generators(gens, "S5", small); }),
            ErrorCode::ClosureExceedsCap);
  EXPECT_EQ(from_permutation_generators(gens, "S5").order(), 120u);
}

TEST(Closure, MixedDegreesAreRejected) {
  const Permutation gens[] = {Permutation::from_cycles(3, {{0, 1}}),
                              Permutation::from_cycles(4, {{0, 3}})};
  EXPECT_EQ(code_of([&] { from_permutation_generators(gens, "bad"); }),
            ErrorCode::InvalidPermutation);
}

TEST(Group, ElementOrdersAndPowers) {
  const Group c12 = make(FamilyKind::cyclic, {12});
  std::multiset<std::uint64_t> orders;
  for (ElementIndex x = 0; x < 12; ++x) orders.insert(c12.element_order(x));
  EXPECT_EQ(orders.count(12), 4u);
  EXPECT_EQ(orders.count(6), 2u);
  EXPECT_EQ(orders.count(1), 1u);
  for (ElementIndex x = 0; x < 12; ++x) EXPECT_EQ(c12.power(x, c12.element_order(x)), 0u);
  EXPECT_EQ(exponent(c12), 12u);
  EXPECT_EQ(exponent(make(FamilyKind::symmetric, {4})), 12u);
  EXPECT_EQ(exponent(make(FamilyKind::alternating, {5})), 30u);
}

TEST(Group, DerivedSubgroupAndCentre) {
  struct Case {
    FamilyKind kind;
    std::int64_t param;
    std::size_t derived, centre;
  };
  for (const Case& c : {Case{FamilyKind::symmetric, 3, 3, 1}, Case{FamilyKind::symmetric, 4, 12, 1},
                        Case{FamilyKind::alternating, 4, 4, 1}, Case{FamilyKind::dihedral, 4, 2, 2},
                        Case{FamilyKind::dihedral, 6, 3, 2}, Case{FamilyKind::sl2, 3, 8, 2},
                        Case{FamilyKind::alternating, 5, 60, 1}, Case{FamilyKind::cyclic, 9, 1, 9}}) {
    const Group g = make(c.kind, {c.param});
    EXPECT_EQ(derived_subgroup(g).size(), c.derived) << g.name();
    EXPECT_EQ(center(g).size(), c.centre) << g.name();
    EXPECT_TRUE(is_normal(derived_subgroup(g))) << g.name();
    EXPECT_TRUE(is_normal(center(g))) << g.name();
  }
}

TEST(Group, QuotientAndNormality) {
  const Group s3 = make(FamilyKind::symmetric, {3});
  ElementIndex transposition = 0;
  for (ElementIndex x = 1; x < s3.order(); ++x)
    if (s3.element_order(x) == 2) transposition = x;
  const ElementIndex seed[] = {transposition};
  const SubgroupSet h = subgroup_generated(s3, seed);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_FALSE(is_normal(h));
  EXPECT_EQ(code_of([&] { quotient(s3, h); }), ErrorCode::NotNormal);
  EXPECT_EQ(normal_closure(s3, seed).size(), 6u);

  const Group sl23 = make(FamilyKind::sl2, {3});
  const Quotient q = quotient(sl23, center(sl23));
  EXPECT_EQ(q.group.order(), 12u);
  EXPECT_EQ(derived_subgroup(q.group).size(), 4u);
  for (ElementIndex x = 0; x < sl23.order(); ++x)
    for (ElementIndex y = 0; y < sl23.order(); ++y)
      ASSERT_EQ(q.projection[sl23.mul(x, y)], q.group.mul(q.projection[x], q.projection[y]));
}

TEST(Group, DirectProductRecordsFactors) {
  const Group d8 = make(FamilyKind::dihedral, {4});
  const Group c3 = make(FamilyKind::cyclic, {3});
  const Group p = direct_product(d8, c3);
  EXPECT_EQ(p.order(), 24u);
  ASSERT_EQ(p.factors().size(), 2u);
  EXPECT_EQ(p.factors()[0].name(), "D8");
  EXPECT_EQ(p.factors()[1].name(), "C3");
  EXPECT_EQ(center(p).size(), 6u);
  EXPECT_TRUE(p.renamed("X").factors().size() == 2);
}

TEST(Group, StructureFlags) {
  const auto s4 = structure_flags(make(FamilyKind::symmetric, {4}));
  EXPECT_TRUE(s4.is_solvable);
  EXPECT_FALSE(s4.is_perfect);
  EXPECT_EQ(s4.derived_length, 3u);
  EXPECT_EQ(s4.perfect_core.size(), 1u);

  const auto a5 = structure_flags(make(FamilyKind::alternating, {5}));
  EXPECT_FALSE(a5.is_solvable);
  EXPECT_TRUE(a5.is_perfect);
  EXPECT_EQ(a5.perfect_core.size(), 60u);

  const auto s5 = structure_flags(make(FamilyKind::symmetric, {5}));
  EXPECT_FALSE(s5.is_solvable);
  EXPECT_EQ(s5.perfect_core.size(), 60u);

  const auto c1 = structure_flags(make(FamilyKind::cyclic, {1}));
  EXPECT_TRUE(c1.is_abelian && c1.is_solvable && c1.is_perfect);
}

TEST(Group, IndexTwoSubgroups) {
  EXPECT_EQ(index_two_subgroups(make(FamilyKind::dihedral, {4})).size(), 3u);
  EXPECT_EQ(index_two_subgroups(make(FamilyKind::dihedral, {5})).size(), 1u);
  EXPECT_EQ(index_two_subgroups(make(FamilyKind::alternating, {4})).size(), 0u);
  EXPECT_EQ(index_two_subgroups(make(FamilyKind::cyclic, {7})).size(), 0u);
  const Group c2 = make(FamilyKind::cyclic, {2});
  const Group c2_3 = direct_product(direct_product(c2, c2), c2);
  const auto subs = index_two_subgroups(c2_3);
  EXPECT_EQ(subs.size(), 7u);
  for (const auto& h : subs) EXPECT_EQ(h.size(), 4u);
}

TEST(Group, PrimePowerOrder) {
  std::uint64_t p = 0;
  EXPECT_TRUE(is_prime_power_order(make(FamilyKind::dihedral, {4}), &p));
  EXPECT_EQ(p, 2u);
  EXPECT_TRUE(is_prime_power_order(make(FamilyKind::extraspecial, {3, 1}), &p));
  EXPECT_EQ(p, 3u);
  EXPECT_FALSE(is_prime_power_order(make(FamilyKind::symmetric, {3})));
  EXPECT_FALSE(is_prime_power_order(make(FamilyKind::cyclic, {1})));
}

TEST(Group, SubgroupAsGroupKeepsLabels) {
  const Group s4 = make(FamilyKind::symmetric, {4});
  const SubgroupSet d = derived_subgroup(s4);
  const Group a4 = subgroup_as_group(d, "A4");
  EXPECT_EQ(a4.order(), 12u);
  for (ElementIndex i = 0; i < a4.order(); ++i) EXPECT_EQ(a4.label(i), s4.label(d.elements()[i]));
  EXPECT_EQ(derived_subgroup(a4).size(), 4u);
  EXPECT_EQ(derived_subgroup_of(d).size(), 4u);
}

}  // namespace
}  // namespace antidiag
