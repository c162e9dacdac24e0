#pragma once

#include "antidiag/chartab.hpp"
#include "antidiag/classes.hpp"
#include "antidiag/families.hpp"
#include "antidiag/group.hpp"
#include "antidiag/limits.hpp"
#include "antidiag/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antidiag {

struct InvariantReport {
  std::string name;
  std::uint64_t order = 0;
  Rational ad;
  Rational cp;
  Rational f;
  std::uint64_t class_count = 0;
  std::vector<std::uint64_t> cd_set;
  std::map<std::uint64_t, std::uint64_t> irr_counts;
  std::optional<std::uint64_t> mindeg;  // none for abelian groups
  std::uint64_t maxdeg = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t center_index = 0;
  bool is_abelian = false;
  bool is_solvable = false;
  bool is_perfect = false;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Sum of d^3 over |G|.
Rational ad_from_degrees(const DegreeMultiset& degrees);
/// Sum of d over |G|.
Rational f_from_degrees(const DegreeMultiset& degrees);

Rational ad(const Group& g, const Limits& limits = {});

/// Asserts ad >= 1 (equality iff abelian), ad >= 3/2 when nonabelian and
/// ad^2 cp >= 1 (strict iff nonabelian); std::logic_error otherwise.
InvariantReport invariant_report(const Group& g, const Limits& limits = {});
InvariantReport invariant_report(const Group& g, const ClassPartition& part,
                                 const DegreeMultiset& degrees, const StructureFlags& flags);

/// 1 + (m - 1)(1 - 1/n). Throws Error(InvalidArgs) unless m, n >= 2.
Rational hammer_bound(std::int64_t m, std::int64_t n);

struct GapClassification {
  Rational value;
  bool in_gap_set = false;
  std::optional<BigInt> n;  // value = 2 - 1/n
};

GapClassification gap_classify(const Rational& value);

/// Closed-form AD for dihedral, extraspecial, affine and sl2 members.
/// Throws Error(UnsupportedFamily) for other kinds, Error(InvalidParams) for bad params.
Rational closed_form_ad(const FamilySpec& spec);

struct BoundCheckResult {
  std::string bound_name;
  bool applicable = false;
  Rational lhs;
  Rational rhs;
  std::string relation = ">=";  // how lhs compares to rhs when the check holds
  bool holds = true;
  std::string witness;

  friend bool operator==(const BoundCheckResult&, const BoundCheckResult&) = default;
};

/// For f : X -> [-1, d] with sum f = 0 and sum f^2 = |X|, checks
/// |supp f| >= |X| / d. The witness records |N|, |P|, |R| for the split at
/// c = d - 1. Throws Error(HypothesisViolated) if mean, variance or range fail.
BoundCheckResult support_bound_check(std::span<const Rational> values, const Rational& d);

/// Same for real cyclotomic values (e.g. |psi|^2 - 1). Sums and the support
/// are exact; the range and the N/P/R split use the complex embedding unless
/// the value is an integer.
BoundCheckResult support_bound_check(const CyclotomicField& field,
                                     std::span<const CyclotomicField::Value> values,
                                     const Rational& d);

}  // namespace antidiag
