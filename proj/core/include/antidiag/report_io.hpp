#pragma once

#include "antidiag/invariants.hpp"
#include "antidiag/scan.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace antidiag {

/// One CSV line: name, order, ad_frac, ad_dec, cp_frac, f_frac, cd_set,
/// derived_order, center_index, solvable, perfect, gap_n.
struct CsvRow {
  std::string name;
  std::uint64_t order = 0;
  Rational ad;
  std::string ad_dec;
  Rational cp;
  Rational f;
  std::vector<std::uint64_t> cd_set;
  std::uint64_t derived_order = 0;
  std::uint64_t center_index = 0;
  bool solvable = false;
  bool perfect = false;
  std::optional<BigInt> gap_n;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

CsvRow to_csv_row(const InvariantReport& report);

std::string csv_header();
std::string to_csv_line(const CsvRow& row);
/// Header plus one line per successfully analysed row, in scan order.
void write_csv(std::ostream& out, const ScanReport& report);

/// Parses text written by write_csv (RFC 4180 quoting). Throws Error(ParseError).
std::vector<CsvRow> parse_csv(std::string_view text);

/// JSON renderings; exact values as "p/q" strings.
std::string report_json(const InvariantReport& report, int indent = 2);
std::string scan_json(const ScanReport& report, int indent = 2);

}  // namespace antidiag
