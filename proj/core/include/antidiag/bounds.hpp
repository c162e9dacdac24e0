#pragma once

#include "antidiag/chartab.hpp"
#include "antidiag/classes.hpp"
#include "antidiag/group.hpp"
#include "antidiag/invariants.hpp"
#include "antidiag/limits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antidiag {

/// A subgroup together with its degree data.
struct SubgroupProfile {
  SubgroupSet set;
  Group group;
  DegreeMultiset degrees;
  Rational ad;
};

/// Everything the check suites need about one group, computed once.
struct GroupProfile {
  Group group;
  ClassPartition classes;
  DegreeMultiset degrees;
  StructureFlags flags;
  SubgroupSet derived;
  SubgroupSet center;
  InvariantReport report;
  std::vector<SubgroupProfile> index_two;
  /// Present when the order is within limits.full_table_cap.
  std::optional<CharacterTable> table;
};

GroupProfile make_profile(const Group& g, const Limits& limits = {});

/// Degree-only certificates used in place of isomorphism tests.
bool is_a5_certificate(const InvariantReport& r);
bool is_sl25_certificate(const InvariantReport& r);

/// Lower bounds and formulas on AD: hammer, minimal AD, 2 not in c.d.,
/// maxdeg bounds, maxdeg <= 2 formula, Hoelder, p-groups, odd order and
/// multiplicativity over recorded direct factors.
std::vector<BoundCheckResult> bound_suite(const GroupProfile& p, const Limits& limits = {});
std::vector<BoundCheckResult> bound_suite(const Group& g, const Limits& limits = {});

/// Solvability threshold, perfect minimum, perfect cp, centre of index 4,
/// gap theorem and index-2 inheritance.
std::vector<BoundCheckResult> threshold_suite(const GroupProfile& p, const Limits& limits = {});
std::vector<BoundCheckResult> threshold_suite(const Group& g, const Limits& limits = {});

struct StructureOptions {
  std::uint64_t seed = 0;
  std::size_t subgroup_samples = 20;
};

/// Degree identities, Gallagher, oracle agreement, character-support lemmas,
/// index-2 facts, monotonicity spot checks and the index-2 descent chain.
std::vector<BoundCheckResult> structure_suite(const GroupProfile& p, const Limits& limits = {},
                                              const StructureOptions& options = {});

/// The group profile of a subgroup (degrees via the Dixon algorithm).
SubgroupProfile profile_subgroup(const SubgroupSet& h, const std::string& name,
                                 const Limits& limits = {});

}  // namespace antidiag
