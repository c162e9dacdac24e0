#include "cli.hpp"

#include "antidiag/bounds.hpp"
#include "antidiag/catalog.hpp"
#include "antidiag/chartab.hpp"
#include "antidiag/error.hpp"
#include "antidiag/families.hpp"
#include "antidiag/invariants.hpp"
#include "antidiag/report_io.hpp"
#include "antidiag/scan.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace antidiag::cli {

namespace {

struct Target {
  std::string family;
  std::vector<std::int64_t> params;
  std::string entry;
  std::string catalog = "bundled";
};

struct Flags {
  bool json = false;
  bool approx = false;
  std::string csv;
  std::string summary;
  std::size_t cap = Limits{}.order_cap;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

Limits limits_from(const Flags& f) {
  Limits l;
  l.order_cap = f.cap;
  return l;
}

std::vector<CatalogEntry> load(const std::string& where) {
  if (where == "bundled") return bundled_catalog();
  return load_catalog(where);
}

Group resolve(const Target& t, const Limits& limits) {
  const bool by_family = !t.family.empty(), by_entry = !t.entry.empty();
  if (by_family == by_entry) {
    throw Error(ErrorCode::InvalidArgs, "give exactly one of --family or --entry");
  }
  if (by_family) {
    const auto kind = parse_family_kind(t.family);
    if (!kind) throw Error(ErrorCode::InvalidArgs, "unknown family \"" + t.family + "\"");
    if (*kind == FamilyKind::product) {
      throw Error(ErrorCode::InvalidArgs, "products are built from catalog entries; use --entry");
    }
    FamilySpec spec{*kind, t.params, {}};
    return make_family(spec, limits).renamed(family_name(spec));
  }
  const auto entries = load(t.catalog);
  std::map<std::string, Group> built;
  for (const auto& e : entries) {
    if (e.name == t.entry) return build_entry(e, built, limits);
    // Earlier entries may be factors of a later product.
    try {
      built.emplace(e.name, build_entry(e, built, limits));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgs, "no entry named \"" + t.entry + "\" in " + t.catalog);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

void print_report(const InvariantReport& r, std::ostream& out) {
  std::string degrees;
  for (const auto& [d, c] : r.irr_counts) {
    degrees += (degrees.empty() ? "" : " ") + std::to_string(d) + "^" + std::to_string(c);
  }
  const auto gap = gap_classify(r.ad);
  const std::pair<const char*, std::string> lines[] = {
      {"name", r.name},
      {"order", std::to_string(r.order)},
      {"AD", to_fraction_string(r.ad) + " (" + to_decimal_string(r.ad) + ")"},
      {"cp", to_fraction_string(r.cp) + " (" + to_decimal_string(r.cp) + ")"},
      {"f", to_fraction_string(r.f) + " (" + to_decimal_string(r.f) + ")"},
      {"classes", std::to_string(r.class_count)},
      {"c.d.", join(r.cd_set, ",")},
      {"degrees", degrees},
      {"mindeg", r.mindeg ? std::to_string(*r.mindeg) : std::string("-")},
      {"maxdeg", std::to_string(r.maxdeg)},
      {"|G'|", std::to_string(r.derived_order)},
      {"[G:Z(G)]", std::to_string(r.center_index)},
      {"abelian", yes_no(r.is_abelian)},
      {"solvable", yes_no(r.is_solvable)},
      {"perfect", yes_no(r.is_perfect)},
      {"gap n", gap.n ? gap.n->str() : std::string("-")},
  };
  for (const auto& [key, value] : lines) out << std::left << std::setw(10) << key << value << "\n";
}

std::vector<std::string> class_names(const ClassPartition& part) {
  std::map<std::uint64_t, int> used;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < part.k(); ++c) {
    const int i = used[part.element_orders[c]]++;
    std::string suffix;
    for (int n = i;; n = n / 26 - 1) {
      suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
      if (n < 26) break;
    }
    names.push_back(std::to_string(part.element_orders[c]) + suffix);
  }
  return names;
}

std::string approx(std::complex<double> z) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  const double re = std::abs(z.real()) < 5e-5 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-5 ? 0.0 : z.imag();
  os << re;
  if (im != 0.0) os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  return os.str();
}

void print_table(const CharacterTable& t, bool with_approx, std::ostream& out) {
  const std::size_t k = t.k();
  const auto names = class_names(t.classes);
  std::vector<std::vector<std::string>> cells(k + 2, std::vector<std::string>(k + 1));
  cells[0][0] = "class";
  cells[1][0] = "size";
  for (std::size_t c = 0; c < k; ++c) {
    cells[0][c + 1] = names[c];
    cells[1][c + 1] = std::to_string(t.classes.sizes[c]);
  }
  for (std::size_t r = 0; r < k; ++r) {
    cells[r + 2][0] = "X." + std::to_string(r + 1);
    for (std::size_t c = 0; c < k; ++c) {
      std::string v = t.field.to_string(t.values[r][c]);
      if (with_approx && !CyclotomicField::as_integer(t.values[r][c])) {
        v += " [" + approx(t.field.to_complex(t.values[r][c])) + "]";
      }
      cells[r + 2][c + 1] = v;
    }
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= k; ++c) width[c] = std::max(width[c], row[c].size());

  out << t.group.name() << "  order " << t.group.order() << "  degrees "
      << join(t.degrees, ",") << "\n";
  out << "z = exp(2 pi i / " << t.field.order() << ")\n";
  std::size_t total = 0;
  for (auto w : width) total += w;
  total += 2 * k;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c <= k; ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c]))
          << (c ? std::right : std::left) << cells[r][c];
    }
    out << "\n";
    if (r == 1) out << std::string(total, '-') << "\n";
  }
}

void print_families(std::ostream& out) {
  const std::pair<FamilyKind, const char*> rows[] = {
      {FamilyKind::cyclic, "n            order n"},
      {FamilyKind::dihedral, "k            order 2k"},
      {FamilyKind::symmetric, "n            order n!"},
      {FamilyKind::alternating, "n            order n!/2"},
      {FamilyKind::sl2, "q            order q^3 - q (q a prime power)"},
      {FamilyKind::gl2_3, "(none)       order 48"},
      {FamilyKind::psl2_7, "(none)       order 168"},
      {FamilyKind::extraspecial, "p n          order p^(2n+1), + type"},
      {FamilyKind::affine, "q            order q(q - 1) (q a prime power)"},
      {FamilyKind::product, "(catalog)    product of catalog entries"},
  };
  for (const auto& [kind, text] : rows) {
    out << std::left << std::setw(14) << to_string(kind) << text << "\n";
  }
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string csv_text(const ScanReport& report) {
  std::ostringstream os;
  write_csv(os, report);
  return os.str();
}

ScanOptions scan_options(const Flags& f) {
  ScanOptions o;
  o.limits = limits_from(f);
  o.seed = f.seed;
  o.jobs = f.jobs;
  return o;
}

int cmd_compute(const Target& t, const Flags& f, std::ostream& out) {
  const Limits limits = limits_from(f);
  const InvariantReport r = invariant_report(resolve(t, limits), limits);
  if (f.json) out << report_json(r) << "\n";
  else print_report(r, out);
  return kOk;
}

int cmd_table(const Target& t, const Flags& f, std::ostream& out) {
  const Limits limits = limits_from(f);
  print_table(character_table(resolve(t, limits), limits), f.approx, out);
  return kOk;
}

int cmd_scan(const std::string& where, const Flags& f, bool verify, std::ostream& out,
             std::ostream& err) {
  const auto entries = load(where);
  const ScanOptions options = scan_options(f);
  const ScanReport report = scan(entries, options);
  const std::string summary = theorem_summary(report, options);
  err << "scanned " << report.summary.entries << " entries in " << std::fixed
      << std::setprecision(2) << report.summary.seconds << " s\n";

  if (!f.csv.empty() && !write_file(f.csv, csv_text(report), err)) return kUsage;
  if (!f.summary.empty() && !write_file(f.summary, summary, err)) return kUsage;

  if (f.json) {
    out << scan_json(report) << "\n";
  } else if (verify) {
    out << summary;
  } else {
    if (f.csv.empty()) out << csv_text(report);
    out << "entries " << report.summary.entries << ", failed " << report.summary.errors
        << ", checks " << report.summary.applicable << ", violations " << report.violations.size()
        << "\n";
  }

  if (!report.violations.empty()) return kViolation;
  if (verify && report.summary.errors > 0) return kViolation;
  return kOk;
}

int cmd_export(const std::string& where, const Flags& f, std::ostream& out, std::ostream& err) {
  const auto entries = load(where);
  const Limits limits = limits_from(f);
  ScanReport report;
  std::map<std::string, Group> built;
  for (const auto& e : entries) {
    ScanRow row;
    row.name = e.name;
    row.notes = e.notes;
    try {
      Group g = build_entry(e, built, limits);
      built.emplace(e.name, g);
      row.report = invariant_report(g, limits);
    } catch (const std::exception& ex) {
      row.error = ex.what();
      ++report.summary.errors;
      err << "warning: " << e.name << ": " << ex.what() << "\n";
    }
    report.rows.push_back(std::move(row));
  }
  report.summary.entries = entries.size();
  if (!f.csv.empty()) return write_file(f.csv, csv_text(report), err) ? kOk : kUsage;
  out << (f.json ? scan_json(report) + "\n" : csv_text(report));
  return kOk;
}

void add_target(CLI::App* cmd, Target& t) {
  cmd->add_option("--family", t.family, "Family kind (see `families`)");
  cmd->add_option("--param", t.params, "Family parameter (repeat for several)");
  cmd->add_option("--entry", t.entry, "Catalog entry name");
  cmd->add_option("--catalog", t.catalog, "Catalog file for --entry (default: bundled)");
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--cap", f.cap, "Order cap for group construction");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact AD(G), cp(G) and character data for finite groups", "antidiag"};
  app.require_subcommand(1, 1);

  Target target;
  Flags flags;
  std::string where;

  auto* compute = app.add_subcommand("compute", "Invariant report for one group");
  add_target(compute, target);
  add_common(compute, flags);
  compute->add_flag("--json", flags.json, "Print a JSON object");

  auto* table = app.add_subcommand("table", "Exact character table for one group");
  add_target(table, target);
  add_common(table, flags);
  table->add_flag("--approx", flags.approx, "Append decimal approximations");

  auto* scan_cmd = app.add_subcommand("scan", "Invariants and checks for a catalog");
  auto* verify_cmd = app.add_subcommand("verify", "Theorem summary for a catalog");
  for (auto* cmd : {scan_cmd, verify_cmd}) {
    cmd->add_option("catalog", where, "\"bundled\" or a catalog file")->required();
    add_common(cmd, flags);
    cmd->add_option("--csv", flags.csv, "Write the CSV report here");
    cmd->add_option("--seed", flags.seed, "Seed for sampled subgroups");
    cmd->add_option("--jobs", flags.jobs, "Worker threads (0: all cores)");
    cmd->add_flag("--json", flags.json, "Print the scan as JSON");
  }
  verify_cmd->add_option("--summary", flags.summary, "Write the summary here");

  auto* families = app.add_subcommand("families", "List the group families");

  auto* export_cmd = app.add_subcommand("export", "Invariant reports only, as CSV or JSON");
  export_cmd->add_option("catalog", where, "\"bundled\" or a catalog file")->required();
  add_common(export_cmd, flags);
  export_cmd->add_option("--csv", flags.csv, "Write CSV here instead of standard output");
  export_cmd->add_flag("--json", flags.json, "Print JSON instead of CSV");

  std::vector<const char*> argv{"antidiag"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(target, flags, out);
    if (table->parsed()) return cmd_table(target, flags, out);
    if (scan_cmd->parsed()) return cmd_scan(where, flags, false, out, err);
    if (verify_cmd->parsed()) return cmd_scan(where, flags, true, out, err);
    if (export_cmd->parsed()) return cmd_export(where, flags, out, err);
    if (families->parsed()) {
      print_families(out);
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace antidiag::cli
