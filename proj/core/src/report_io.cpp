#include "antidiag/report_io.hpp"

#include "antidiag/error.hpp"

#include "json.hpp"

#include <charconv>
#include <sstream>

namespace antidiag {

namespace {

using nlohmann::ordered_json;

const char* const kColumns[] = {"name",          "order",        "ad_frac",  "ad_dec",
                                "cp_frac",       "f_frac",       "cd_set",   "derived_order",
                                "center_index",  "solvable",     "perfect",  "gap_n"};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_degrees(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::vector<std::string>> split_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      field_started = false;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted CSV field");
  if (field_started || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad integer \"" + s + "\"");
  }
  return v;
}

bool parse_bool(const std::string& s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad boolean \"" + s + "\"");
}

ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["ad"] = to_fraction_string(r.ad);
  j["ad_decimal"] = to_decimal_string(r.ad);
  j["cp"] = to_fraction_string(r.cp);
  j["f"] = to_fraction_string(r.f);
  j["class_count"] = r.class_count;
  j["cd_set"] = r.cd_set;
  ordered_json counts = ordered_json::object();
  for (const auto& [d, c] : r.irr_counts) counts[std::to_string(d)] = c;
  j["irr_counts"] = counts;
  j["mindeg"] = r.mindeg ? ordered_json(*r.mindeg) : ordered_json(nullptr);
  j["maxdeg"] = r.maxdeg;
  j["derived_order"] = r.derived_order;
  j["center_index"] = r.center_index;
  j["abelian"] = r.is_abelian;
  j["solvable"] = r.is_solvable;
  j["perfect"] = r.is_perfect;
  const auto gap = gap_classify(r.ad);
  j["gap_n"] = gap.n ? ordered_json(gap.n->str()) : ordered_json(nullptr);
  return j;
}

}  // namespace

CsvRow to_csv_row(const InvariantReport& r) {
  CsvRow row;
  row.name = r.name;
  row.order = r.order;
  row.ad = r.ad;
  row.ad_dec = to_decimal_string(r.ad);
  row.cp = r.cp;
  row.f = r.f;
  row.cd_set = r.cd_set;
  row.derived_order = r.derived_order;
  row.center_index = r.center_index;
  row.solvable = r.is_solvable;
  row.perfect = r.is_perfect;
  row.gap_n = gap_classify(r.ad).n;
  return row;
}

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumnCount; ++i) out += (i ? "," : "") + std::string(kColumns[i]);
  return out;
}

std::string to_csv_line(const CsvRow& r) {
  const std::string fields[] = {r.name,
                                std::to_string(r.order),
                                to_fraction_string(r.ad),
                                r.ad_dec,
                                to_fraction_string(r.cp),
                                to_fraction_string(r.f),
                                join_degrees(r.cd_set),
                                std::to_string(r.derived_order),
                                std::to_string(r.center_index),
                                r.solvable ? "true" : "false",
                                r.perfect ? "true" : "false",
                                r.gap_n ? r.gap_n->str() : std::string()};
  std::string out;
  for (std::size_t i = 0; i < kColumnCount; ++i) out += (i ? "," : "") + quote(fields[i]);
  return out;
}

void write_csv(std::ostream& out, const ScanReport& report) {
  out << csv_header() << "\n";
  for (const auto& row : report.rows)
    if (row.report) out << to_csv_line(to_csv_row(*row.report)) << "\n";
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  const auto records = split_records(text);
  if (records.empty()) throw Error(ErrorCode::ParseError, "empty CSV");
  std::string header;
  for (std::size_t i = 0; i < records[0].size(); ++i) header += (i ? "," : "") + records[0][i];
  if (header != csv_header()) throw Error(ErrorCode::ParseError, "line 1: unexpected CSV header");

  std::vector<CsvRow> rows;
  for (std::size_t n = 1; n < records.size(); ++n) {
    const auto& f = records[n];
    const std::size_t line = n + 1;
    if (f.size() != kColumnCount) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected " +
                                             std::to_string(kColumnCount) + " fields");
    }
    CsvRow r;
    r.name = f[0];
    r.order = parse_u64(f[1], line);
    r.ad = parse_fraction(f[2]);
    r.ad_dec = f[3];
    r.cp = parse_fraction(f[4]);
    r.f = parse_fraction(f[5]);
    std::string_view cd = f[6];
    while (!cd.empty()) {
      const auto semi = cd.find(';');
      r.cd_set.push_back(parse_u64(std::string(cd.substr(0, semi)), line));
      cd = semi == std::string_view::npos ? std::string_view() : cd.substr(semi + 1);
    }
    r.derived_order = parse_u64(f[7], line);
    r.center_index = parse_u64(f[8], line);
    r.solvable = parse_bool(f[9], line);
    r.perfect = parse_bool(f[10], line);
    if (!f[11].empty()) r.gap_n = BigInt(parse_u64(f[11], line));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string report_json(const InvariantReport& report, int indent) {
  return to_json(report).dump(indent);
}

std::string scan_json(const ScanReport& report, int indent) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json j;
    j["name"] = row.name;
    if (!row.notes.empty()) j["notes"] = row.notes;
    if (row.report) j["report"] = to_json(*row.report);
    if (!row.error.empty()) j["error"] = row.error;
    std::size_t applicable = 0, passed = 0;
    for (const auto& c : row.checks) {
      if (!c.applicable) continue;
      ++applicable;
      if (c.holds) ++passed;
    }
    j["checks_applicable"] = applicable;
    j["checks_passed"] = passed;
    rows.push_back(std::move(j));
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"group", v.group},
                          {"bound", v.bound},
                          {"lhs", to_fraction_string(v.lhs)},
                          {"relation", v.relation},
                          {"rhs", to_fraction_string(v.rhs)},
                          {"witness", v.witness}});
  }
  ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["violations"] = std::move(violations);
  doc["summary"] = {{"entries", report.summary.entries},
                    {"errors", report.summary.errors},
                    {"checks", report.summary.checks},
                    {"applicable", report.summary.applicable},
                    {"passed", report.summary.passed}};
  return doc.dump(indent);
}

}  // namespace antidiag
