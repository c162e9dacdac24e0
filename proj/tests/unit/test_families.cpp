#include "antidiag/families.hpp"
#include "antidiag/finite_field.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

namespace antidiag {
namespace {

using test::code_of;
using test::spec;

TEST(Families, OrdersMatchDocumentation) {
  const std::vector<std::pair<FamilySpec, std::uint64_t>> cases = {
      {spec(FamilyKind::cyclic, {1}), 1},         {spec(FamilyKind::cyclic, {12}), 12},
      {spec(FamilyKind::dihedral, {1}), 2},       {spec(FamilyKind::dihedral, {12}), 24},
      {spec(FamilyKind::symmetric, {1}), 1},      {spec(FamilyKind::symmetric, {5}), 120},
      {spec(FamilyKind::alternating, {1}), 1},    {spec(FamilyKind::alternating, {5}), 60},
      {spec(FamilyKind::sl2, {2}), 6},            {spec(FamilyKind::sl2, {4}), 60},
      {spec(FamilyKind::sl2, {7}), 336},          {spec(FamilyKind::gl2_3), 48},
      {spec(FamilyKind::psl2_7), 168},            {spec(FamilyKind::extraspecial, {2, 1}), 8},
      {spec(FamilyKind::extraspecial, {2, 2}), 32}, {spec(FamilyKind::extraspecial, {5, 1}), 125},
      {spec(FamilyKind::affine, {8}), 56},        {spec(FamilyKind::affine, {9}), 72},
  };
  for (const auto& [s, order] : cases) {
    EXPECT_EQ(family_order(s), order) << family_name(s);
    EXPECT_EQ(make_family(s).order(), order) << family_name(s);
  }
}

TEST(Families, Names) {
  EXPECT_EQ(family_name(spec(FamilyKind::cyclic, {7})), "C7");
  EXPECT_EQ(family_name(spec(FamilyKind::dihedral, {5})), "D10");
  EXPECT_EQ(family_name(spec(FamilyKind::symmetric, {4})), "S4");
  EXPECT_EQ(family_name(spec(FamilyKind::alternating, {5})), "A5");
  EXPECT_EQ(family_name(spec(FamilyKind::sl2, {5})), "SL(2,5)");
  EXPECT_EQ(family_name(spec(FamilyKind::affine, {9})), "AGL(1,9)");
  EXPECT_EQ(family_name(spec(FamilyKind::extraspecial, {3, 1})), "3^(1+2)");
  EXPECT_EQ(make_family(spec(FamilyKind::psl2_7)).name(), family_name(spec(FamilyKind::psl2_7)));
}

TEST(Families, KindNamesRoundTrip) {
  for (auto kind : all_family_kinds()) EXPECT_EQ(parse_family_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_family_kind("heisenberg").has_value());
}

TEST(Families, InvalidParameters) {
  for (const auto& s : {spec(FamilyKind::cyclic, {0}), spec(FamilyKind::cyclic, {}),
                        spec(FamilyKind::dihedral, {1, 2}), spec(FamilyKind::sl2, {6}),
                        spec(FamilyKind::affine, {1}), spec(FamilyKind::extraspecial, {4, 1}),
                        spec(FamilyKind::extraspecial, {3, 0}), spec(FamilyKind::gl2_3, {3}),
                        spec(FamilyKind::product)}) {
    EXPECT_EQ(code_of([&] { validate(s); }), ErrorCode::InvalidParams) << to_string(s.kind);
    EXPECT_EQ(code_of([&] { make_family(s); }), ErrorCode::InvalidParams) << to_string(s.kind);
  }
}

TEST(Families, ProductSpec) {
  FamilySpec s{FamilyKind::product, {}, {spec(FamilyKind::dihedral, {4}), spec(FamilyKind::cyclic, {3})}};
  const Group g = make_family(s);
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(family_order(s), 24u);
  EXPECT_EQ(g.factors().size(), 2u);
}

TEST(Families, ExtraspecialStructure) {
  for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    const Group g = make_family(spec(FamilyKind::extraspecial, {p, n}));
    EXPECT_EQ(center(g).size(), static_cast<std::size_t>(p)) << g.name();
    EXPECT_EQ(derived_subgroup(g).size(), static_cast<std::size_t>(p)) << g.name();
    EXPECT_TRUE(center(g).elements() == derived_subgroup(g).elements()) << g.name();
    // The "+" type has exponent p for odd p.
    if (p > 2) {
      EXPECT_EQ(exponent(g), static_cast<std::uint64_t>(p)) << g.name();
    }
  }
}

TEST(Families, LinearGroups) {
  const Group sl25 = make_family(spec(FamilyKind::sl2, {5}));
  EXPECT_EQ(center(sl25).size(), 2u);
  EXPECT_TRUE(structure_flags(sl25).is_perfect);
  const Group sl24 = make_family(spec(FamilyKind::sl2, {4}));
  EXPECT_EQ(center(sl24).size(), 1u);
  EXPECT_TRUE(structure_flags(sl24).is_perfect);
  const Group gl23 = make_family(spec(FamilyKind::gl2_3));
  EXPECT_EQ(derived_subgroup(gl23).size(), 24u);
  EXPECT_EQ(center(gl23).size(), 2u);
  const Group psl = make_family(spec(FamilyKind::psl2_7));
  EXPECT_TRUE(structure_flags(psl).is_perfect);
  EXPECT_EQ(center(psl).size(), 1u);
}

TEST(Families, AffineGroupsAreFrobenius) {
  for (std::int64_t q : {3, 4, 5, 7, 8, 9}) {
    const Group g = make_family(spec(FamilyKind::affine, {q}));
    EXPECT_EQ(derived_subgroup(g).size(), static_cast<std::size_t>(q)) << g.name();
    EXPECT_EQ(center(g).size(), 1u) << g.name();
  }
}

TEST(FiniteField, FieldAxiomsOnSmallFields) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const FiniteField f(q);
    EXPECT_EQ(f.size(), q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c)
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << q;
      }
    }
    // The primitive element generates the multiplicative group.
    std::uint32_t x = 1;
    std::uint64_t steps = 0;
    do {
      x = f.mul(x, f.primitive_element());
      ++steps;
    } while (x != 1);
    EXPECT_EQ(steps, q - 1);
    EXPECT_EQ(f.additive_basis().size(), f.degree());
  }
  EXPECT_EQ(code_of([] { FiniteField(6); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { FiniteField(1); }), ErrorCode::InvalidParams);
}

TEST(FiniteField, PrimePowerDecomposition) {
  EXPECT_EQ(prime_power_decomposition(8), (std::pair<std::uint64_t, unsigned>{2, 3}));
  EXPECT_EQ(prime_power_decomposition(9), (std::pair<std::uint64_t, unsigned>{3, 2}));
  EXPECT_EQ(prime_power_decomposition(7), (std::pair<std::uint64_t, unsigned>{7, 1}));
  EXPECT_FALSE(prime_power_decomposition(12));
  EXPECT_FALSE(prime_power_decomposition(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2147483647));
}

}  // namespace
}  // namespace antidiag
