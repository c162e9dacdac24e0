#pragma once

#include "antidiag/group.hpp"
#include "antidiag/limits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antidiag {

enum class FamilyKind {
  cyclic,        // params: n          order n
  dihedral,      // params: k          order 2k
  symmetric,     // params: n          order n!
  alternating,   // params: n          order n!/2 (trivial for n < 2)
  sl2,           // params: q          order q^3 - q
  gl2_3,         // no params          order 48
  psl2_7,        // no params          order 168
  extraspecial,  // params: p, n       order p^(2n+1)
  affine,        // params: q          order q(q - 1)
  product,       // factors            product of orders
};

std::string_view to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept;
const std::vector<FamilyKind>& all_family_kinds();

struct FamilySpec {
  FamilyKind kind = FamilyKind::cyclic;
  std::vector<std::int64_t> params;
  /// Only used by FamilyKind::product.
  std::vector<FamilySpec> factors;
};

/// Throws Error(InvalidParams) when the parameters do not fit the kind.
void validate(const FamilySpec& spec);

/// Documented order of the family member (saturates at UINT64_MAX).
std::uint64_t family_order(const FamilySpec& spec);

/// Conventional display name: C7, D10, S4, A5, SL(2,5), AGL(1,9), 3^(1+2), ...
std::string family_name(const FamilySpec& spec);

/// Builds the group. Extraspecial groups are the "+" type: central products of
/// Heisenberg groups over F_p (for p = 2 these are central products of D8).
/// Throws Error(InvalidParams | ClosureExceedsCap).
Group make_family(const FamilySpec& spec, const Limits& limits = {});

}  // namespace antidiag
