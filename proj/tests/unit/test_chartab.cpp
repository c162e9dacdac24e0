#include "antidiag/chartab.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace antidiag {
namespace {

using test::catalog_group;
using test::code_of;
using test::make;

using Degrees = std::vector<std::uint64_t>;

TEST(DegreeMultiset, Accessors) {
  const auto d = DegreeMultiset::from_degrees({5, 1, 3, 4, 3});
  EXPECT_EQ(d.count(3), 2u);
  EXPECT_EQ(d.count(2), 0u);
  EXPECT_EQ(d.total(), 5u);
  EXPECT_EQ(d.sum_of_squares(), 60u);
  EXPECT_EQ(d.maxdeg(), 5u);
  EXPECT_EQ(d.mindeg(), 3u);
  EXPECT_EQ(d.cd_set(), (Degrees{1, 3, 4, 5}));
  EXPECT_EQ(d.expanded(), (Degrees{1, 3, 3, 4, 5}));
  EXPECT_FALSE(DegreeMultiset::from_degrees({1, 1, 1}).mindeg());
}

TEST(Dixon, KnownDegrees) {
  const std::vector<std::pair<Group, Degrees>> cases = {
      {make(FamilyKind::cyclic, {1}), {1}},
      {make(FamilyKind::symmetric, {3}), {1, 1, 2}},
      {make(FamilyKind::symmetric, {4}), {1, 1, 2, 3, 3}},
      {make(FamilyKind::alternating, {4}), {1, 1, 1, 3}},
      {make(FamilyKind::alternating, {5}), {1, 3, 3, 4, 5}},
      {make(FamilyKind::symmetric, {5}), {1, 1, 4, 4, 5, 5, 6}},
      {make(FamilyKind::dihedral, {5}), {1, 1, 2, 2}},
      {make(FamilyKind::sl2, {3}), {1, 1, 1, 2, 2, 2, 3}},
      {make(FamilyKind::gl2_3), {1, 1, 2, 2, 2, 3, 3, 4}},
      {make(FamilyKind::sl2, {5}), {1, 2, 2, 3, 3, 4, 4, 5, 6}},
      {make(FamilyKind::psl2_7), {1, 3, 3, 6, 7, 8}},
      {make(FamilyKind::sl2, {7}), {1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8}},
      {make(FamilyKind::extraspecial, {3, 1}), {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}},
      {make(FamilyKind::affine, {8}), {1, 1, 1, 1, 1, 1, 1, 7}},
      {catalog_group("Q8"), {1, 1, 1, 1, 2}},
  };
  for (const auto& [g, degrees] : cases) {
    EXPECT_EQ(dixon_degrees(g).expanded(), degrees) << g.name();
    EXPECT_EQ(modular_characters(g, conjugacy_classes(g),
                                 class_constants(g, conjugacy_classes(g)))
                  .degrees.size(),
              degrees.size())
        << g.name();
  }
}

TEST(Dixon, ExtraspecialOfOrder32) {
  const auto d = dixon_degrees(make(FamilyKind::extraspecial, {2, 2}));
  EXPECT_EQ(d.count(1), 16u);
  EXPECT_EQ(d.count(4), 1u);
  EXPECT_EQ(d.total(), 17u);
}

TEST(Dixon, ModularRowsAreClassFunctionsModP) {
  const Group g = make(FamilyKind::alternating, {5});
  const ClassPartition part = conjugacy_classes(g);
  const ModularCharacters m = modular_characters(g, part, class_constants(g, part));
  EXPECT_EQ(m.params.prime, 31u);
  ASSERT_EQ(m.values.size(), 5u);
  for (std::uint32_t c = 0; c < part.k(); ++c) EXPECT_EQ(m.values[0][c], 1u);
  for (std::size_t r = 0; r < m.values.size(); ++r) EXPECT_EQ(m.values[r][0], m.degrees[r] % 31);
}

/// Sum over rows of chi(g) conj(chi(h)) is |C_G(g)| when g ~ h, zero otherwise.
void expect_column_orthogonality(const CharacterTable& t) {
  const auto& f = t.field;
  const std::uint64_t order = t.group.order();
  for (std::size_t a = 0; a < t.k(); ++a) {
    for (std::size_t b = 0; b < t.k(); ++b) {
      auto sum = f.zero();
      for (std::size_t r = 0; r < t.k(); ++r)
        sum = f.add(sum, f.mul(t.values[r][a], f.conj(t.values[r][b])));
      const BigInt expected = a == b ? BigInt(order / t.classes.sizes[a]) : BigInt(0);
      EXPECT_EQ(sum, f.from_integer(expected)) << t.group.name() << " " << a << "," << b;
    }
  }
}

TEST(CharacterTable, SymmetricGroupOnThreePoints) {
  const CharacterTable t = character_table(make(FamilyKind::symmetric, {3}));
  ASSERT_EQ(t.k(), 3u);
  EXPECT_EQ(t.degrees, (Degrees{1, 1, 2}));
  std::vector<std::vector<BigInt>> expected(3);
  for (std::size_t c = 0; c < 3; ++c) {
    const auto order = t.classes.element_orders[c];
    expected[0].push_back(1);
    expected[1].push_back(order == 2 ? -1 : 1);
    expected[2].push_back(order == 1 ? 2 : (order == 2 ? 0 : -1));
  }
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_EQ(CyclotomicField::as_integer(t.values[r][c]), expected[r][c]) << r << "," << c;
  expect_column_orthogonality(t);
}

TEST(CharacterTable, CyclicGroupValuesArePowersOfZeta) {
  const Group g = make(FamilyKind::cyclic, {4});
  const CharacterTable t = character_table(g);
  ASSERT_EQ(t.k(), 4u);
  // Each row is a homomorphism to the fourth roots of unity.
  for (std::size_t r = 0; r < 4; ++r) {
    for (ElementIndex x = 0; x < 4; ++x) {
      for (ElementIndex y = 0; y < 4; ++y) {
        EXPECT_EQ(t.field.mul(t.at_element(r, x), t.at_element(r, y)), t.at_element(r, g.mul(x, y)));
      }
    }
  }
  expect_column_orthogonality(t);
}

TEST(CharacterTable, AlternatingGroupGoldenRatio) {
  const CharacterTable t = character_table(make(FamilyKind::alternating, {5}));
  EXPECT_EQ(t.degrees, (Degrees{1, 3, 3, 4, 5}));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  int golden = 0;
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t c = 0; c < t.k(); ++c) {
      if (t.classes.element_orders[c] != 5) continue;
      EXPECT_FALSE(CyclotomicField::as_integer(t.values[r][c]));
      const auto z = t.field.to_complex(t.values[r][c]);
      EXPECT_NEAR(z.imag(), 0.0, 1e-9);
      EXPECT_TRUE(std::abs(z.real() - phi) < 1e-9 || std::abs(z.real() - (1 - phi)) < 1e-9);
      ++golden;
    }
  }
  EXPECT_EQ(golden, 4);
  expect_column_orthogonality(t);
}

TEST(CharacterTable, ColumnOrthogonalityOnSeveralGroups) {
  for (const Group& g : {make(FamilyKind::sl2, {3}), make(FamilyKind::sl2, {5}),
                         make(FamilyKind::psl2_7), make(FamilyKind::extraspecial, {3, 1}),
                         make(FamilyKind::affine, {7}), make(FamilyKind::gl2_3)}) {
    const CharacterTable t = character_table(g);
    EXPECT_EQ(t.degree_multiset(), dixon_degrees(g)) << g.name();
    expect_column_orthogonality(t);
    for (std::size_t r = 0; r < t.k(); ++r) {
      EXPECT_EQ(CyclotomicField::as_integer(t.values[r][0]), BigInt(t.degrees[r]));
      for (std::size_t c = 0; c < t.k(); ++c)
        EXPECT_LE(std::abs(t.field.to_complex(t.values[r][c])), t.degrees[r] + 1e-9);
    }
  }
}

/// pi(g) = number of cosets xH fixed by g.
std::vector<CyclotomicField::Value> permutation_character(const CharacterTable& t,
                                                          const SubgroupSet& h) {
  const Group& g = t.group;
  std::vector<CyclotomicField::Value> out;
  for (auto rep : t.classes.reps) {
    std::uint64_t fixed = 0;
    for (ElementIndex x = 0; x < g.order(); ++x)
      if (h.contains(g.conjugate(rep, x))) ++fixed;
    out.push_back(t.field.from_integer(BigInt(fixed / h.size())));
  }
  return out;
}

TEST(CharacterTable, PermutationCharactersDecompose) {
  const Group g = make(FamilyKind::psl2_7);
  const CharacterTable t = character_table(g);
  for (ElementIndex seed = 1; seed < g.order(); seed += 17) {
    const ElementIndex seeds[] = {seed};
    const SubgroupSet h = subgroup_generated(g, seeds);
    const auto pi = permutation_character(t, h);
    BigInt degree_sum = 0;
    for (std::size_t r = 0; r < t.k(); ++r) {
      const Rational m = inner_product(t, pi, t.values[r]);
      EXPECT_EQ(denominator(m), 1) << seed;
      EXPECT_GE(m, 0);
      if (r == 0) {  // the action on cosets is transitive
        EXPECT_EQ(m, 1);
      }
      degree_sum += numerator(m) * t.degrees[r];
    }
    EXPECT_EQ(degree_sum, BigInt(h.index()));
  }
}

TEST(CharacterTable, InnerProductAndSupport) {
  const CharacterTable t = character_table(make(FamilyKind::symmetric, {3}));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s)
      EXPECT_EQ(inner_product(t, t.values[r], t.values[s]), Rational(r == s ? 1 : 0));
  const CharacterSupport supp = character_support(t, 2);
  EXPECT_EQ(supp.elements.size(), 3u);  // identity and the two 3-cycles
  EXPECT_EQ(supp.classes.size(), 2u);
  EXPECT_EQ(character_support(t, 0).elements.size(), 6u);
}

TEST(CharacterTable, RespectsCap) {
  Limits small;
  small.full_table_cap = 50;
  EXPECT_EQ(code_of([&] { character_table(make(FamilyKind::alternating, {5}), small); }),
            ErrorCode::CapExceeded);
}

}  // namespace
}  // namespace antidiag
