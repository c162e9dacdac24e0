#pragma once

#include "antidiag/bounds.hpp"
#include "antidiag/catalog.hpp"
#include "antidiag/invariants.hpp"
#include "antidiag/limits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antidiag {

struct ScanOptions {
  Limits limits;
  std::uint64_t seed = 0;
  std::size_t subgroup_samples = 20;
  /// Worker threads for the per-entry checks; 0 means one per hardware thread.
  std::size_t jobs = 1;
};

struct ScanRow {
  std::string name;
  std::string notes;
  std::optional<InvariantReport> report;  // empty when construction or analysis failed
  std::string error;
  std::vector<BoundCheckResult> checks;
};

struct Violation {
  std::string group;
  std::string bound;
  Rational lhs;
  Rational rhs;
  std::string relation;
  std::string witness;
};

struct ScanSummary {
  std::size_t entries = 0;
  std::size_t errors = 0;
  std::size_t checks = 0;       // all results, applicable or not
  std::size_t applicable = 0;
  std::size_t passed = 0;
  double seconds = 0.0;         // wall time; not part of any deterministic output
};

struct ScanReport {
  std::vector<ScanRow> rows;  // catalog order
  std::vector<Violation> violations;
  ScanSummary summary;

  bool clean() const noexcept { return violations.empty(); }
};

/// Builds every entry and runs the bound, threshold and structure suites.
/// Per-entry failures are recorded in the row, not thrown.
ScanReport scan(const std::vector<CatalogEntry>& entries, const ScanOptions& options = {});

struct VerifyResult {
  ScanReport report;
  std::string summary;  // deterministic text
  bool passed = false;  // no violations and no failed entries
};

/// Scan plus a per-check tally and witness lists (gap-theorem values and
/// perfect groups).
VerifyResult verify_theorems(const std::vector<CatalogEntry>& entries,
                             const ScanOptions& options = {});

/// The summary text for an existing scan.
std::string theorem_summary(const ScanReport& report, const ScanOptions& options);

}  // namespace antidiag
