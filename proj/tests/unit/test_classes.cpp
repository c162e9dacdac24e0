#include "antidiag/classes.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace antidiag {
namespace {

using test::catalog_group;
using test::code_of;
using test::make;

std::vector<std::uint64_t> sorted_sizes(const ClassPartition& p) {
  auto s = p.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

TEST(Classes, KnownClassSizes) {
  EXPECT_EQ(sorted_sizes(conjugacy_classes(make(FamilyKind::symmetric, {4}))),
            (std::vector<std::uint64_t>{1, 3, 6, 6, 8}));
  EXPECT_EQ(sorted_sizes(conjugacy_classes(make(FamilyKind::alternating, {5}))),
            (std::vector<std::uint64_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(conjugacy_classes(make(FamilyKind::psl2_7)).k(), 6u);
  EXPECT_EQ(conjugacy_classes(make(FamilyKind::sl2, {5})).k(), 9u);
  EXPECT_EQ(conjugacy_classes(make(FamilyKind::cyclic, {11})).k(), 11u);
}

TEST(Classes, PartitionShape) {
  const Group g = make(FamilyKind::sl2, {3});
  const ClassPartition p = conjugacy_classes(g);
  EXPECT_EQ(p.reps[0], 0u);
  EXPECT_EQ(p.sizes[0], 1u);
  std::uint64_t total = 0;
  for (std::uint32_t c = 0; c < p.k(); ++c) {
    const auto members = p.members(g, c);
    EXPECT_EQ(members.size(), p.sizes[c]);
    EXPECT_EQ(members.front(), p.reps[c]);
    for (auto x : members) {
      EXPECT_EQ(p.class_of[x], c);
      EXPECT_EQ(g.element_order(x), p.element_orders[c]);
      EXPECT_EQ(p.class_of[g.inv(x)], p.inverse_class[c]);
    }
    total += p.sizes[c];
    if (c) {
      EXPECT_LT(p.reps[c - 1], p.reps[c]);
    }
  }
  EXPECT_EQ(total, g.order());
}

TEST(Classes, CommutingPairs) {
  EXPECT_EQ(commuting_pair_count(make(FamilyKind::symmetric, {3})), 18u);
  EXPECT_EQ(commuting_pair_count(catalog_group("Q8")), 40u);
  EXPECT_EQ(commuting_pair_count(make(FamilyKind::dihedral, {4})), 40u);
  EXPECT_EQ(commuting_pair_count(make(FamilyKind::cyclic, {9})), 81u);
  Limits small;
  small.commuting_pair_cap = 10;
  EXPECT_EQ(code_of([&] { commuting_pair_count(make(FamilyKind::cyclic, {11}), small); }),
            ErrorCode::CapExceeded);
}

TEST(Classes, CpIsClassCountOverOrder) {
  EXPECT_EQ(cp(make(FamilyKind::alternating, {5})), Rational(1, 12));
  EXPECT_EQ(cp(make(FamilyKind::psl2_7)), Rational(1, 28));
  EXPECT_EQ(cp(make(FamilyKind::sl2, {5})), Rational(3, 40));
  EXPECT_EQ(cp(make(FamilyKind::cyclic, {1})), Rational(1));
}

/// Direct count of a(i, j, l) from its definition, at every element of C_l.
ClassConstants brute_constants(const Group& g, const ClassPartition& p) {
  const std::size_t k = p.k();
  ClassConstants out(k);
  std::vector<std::vector<std::vector<std::uint64_t>>> count(
      k, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(g.order(), 0)));
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex y = 0; y < g.order(); ++y)
      ++count[p.class_of[x]][p.class_of[y]][g.mul(x, y)];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const auto members = p.members(g, static_cast<std::uint32_t>(l));
        out.at(i, j, l) = count[i][j][members.front()];
        for (auto z : members) EXPECT_EQ(count[i][j][z], out(i, j, l));
      }
  return out;
}

TEST(Classes, StructureConstantsMatchDirectCount) {
  for (const Group& g : {make(FamilyKind::symmetric, {4}), make(FamilyKind::sl2, {3}),
                         make(FamilyKind::alternating, {5}), make(FamilyKind::dihedral, {7})}) {
    const ClassPartition p = conjugacy_classes(g);
    EXPECT_EQ(class_constants(g, p), brute_constants(g, p)) << g.name();
  }
}

TEST(Classes, StructureConstantIdentities) {
  const Group g = make(FamilyKind::psl2_7);
  const ClassPartition p = conjugacy_classes(g);
  const ClassConstants a = class_constants(g, p);
  for (std::size_t i = 0; i < p.k(); ++i) {
    // C_i C_{i*} contains the identity |C_i| times.
    EXPECT_EQ(a(i, p.inverse_class[i], 0), p.sizes[i]);
    // Multiplying by the identity class is the identity map.
    for (std::size_t l = 0; l < p.k(); ++l) EXPECT_EQ(a(0, i, l), i == l ? 1u : 0u);
    // Summing |C_l| a(i, j, l) over l counts all pairs.
    for (std::size_t j = 0; j < p.k(); ++j) {
      std::uint64_t total = 0;
      for (std::size_t l = 0; l < p.k(); ++l) total += a(i, j, l) * p.sizes[l];
      EXPECT_EQ(total, p.sizes[i] * p.sizes[j]);
    }
  }
}

TEST(Classes, PowerClass) {
  const Group g = make(FamilyKind::cyclic, {6});
  const ClassPartition p = conjugacy_classes(g);
  for (std::uint32_t c = 0; c < p.k(); ++c) {
    EXPECT_EQ(power_class(g, p, c, 0), 0u);
    EXPECT_EQ(power_class(g, p, c, 1), c);
    EXPECT_EQ(power_class(g, p, c, 6), 0u);
    EXPECT_EQ(p.reps[power_class(g, p, c, 5)], g.inv(p.reps[c]));
  }
}

}  // namespace
}  // namespace antidiag
