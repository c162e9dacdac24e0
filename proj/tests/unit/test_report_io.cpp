#include "antidiag/report_io.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

#include <sstream>

namespace antidiag {
namespace {

using test::code_of;
using test::make;

TEST(Csv, Header) {
  EXPECT_EQ(csv_header(),
            "name,order,ad_frac,ad_dec,cp_frac,f_frac,cd_set,derived_order,center_index,solvable,"
            "perfect,gap_n");
}

TEST(Csv, LineForA5) {
  const auto row = to_csv_row(invariant_report(make(FamilyKind::alternating, {5})));
  EXPECT_EQ(to_csv_line(row), "A5,60,61/15,4.066667,1/12,4/15,1;3;4;5,60,60,false,true,");
  const auto d10 = to_csv_row(invariant_report(make(FamilyKind::dihedral, {5})));
  EXPECT_EQ(to_csv_line(d10), "D10,10,9/5,1.800000,2/5,3/5,1;2,5,10,true,false,5");
}

TEST(Csv, QuotesAwkwardNames) {
  auto row = to_csv_row(invariant_report(make(FamilyKind::cyclic, {2})));
  row.name = "odd, \"name\"";
  const std::string line = to_csv_line(row);
  EXPECT_EQ(line.substr(0, 17), "\"odd, \"\"name\"\"\",2");
  const auto parsed = parse_csv(csv_header() + "\r\n" + line + "\r\n");
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0], row);
}

TEST(Csv, RoundTripsAScan) {
  std::vector<CatalogEntry> entries(bundled_catalog().begin(), bundled_catalog().begin() + 45);
  const ScanReport report = scan(entries);
  std::ostringstream out;
  write_csv(out, report);
  const auto parsed = parse_csv(out.str());
  ASSERT_EQ(parsed.size(), report.rows.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto& rep = *report.rows[i].report;
    EXPECT_EQ(parsed[i], to_csv_row(rep));
    EXPECT_EQ(parsed[i].ad, rep.ad);
    EXPECT_EQ(parsed[i].cp, rep.cp);
    EXPECT_EQ(parsed[i].f, rep.f);
    EXPECT_EQ(parsed[i].cd_set, rep.cd_set);
  }
}

TEST(Csv, ParseErrors) {
  for (const std::string& bad : {std::string(), std::string("a,b\n"),
                                csv_header() + "\nA5,60\n",
                                csv_header() + "\nA5,x,1,1,1,1,1,1,1,true,true,\n",
                                csv_header() + "\nA5,60,1/0,1,1,1,1,1,1,true,true,\n",
                                csv_header() + "\nA5,60,1,1,1,1,1,1,1,yes,true,\n",
                                csv_header() + "\n\"A5,60,1,1,1,1,1,1,1,true,true,\n"}) {
    EXPECT_EQ(code_of([&] { parse_csv(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Csv, SkipsFailedRows) {
  const auto entries = parse_catalog(R"([{"name":"bad","cayley":[[0,1],[0,1]]},
                                          {"name":"C3","kind":"cyclic","params":[3]}])");
  std::ostringstream out;
  write_csv(out, scan(entries));
  const auto parsed = parse_csv(out.str());
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0].name, "C3");
}

TEST(Json, ReportUsesExactStrings) {
  const auto doc = nlohmann::json::parse(report_json(invariant_report(make(FamilyKind::psl2_7))));
  EXPECT_EQ(doc["name"], "PSL(2,7)");
  EXPECT_EQ(doc["order"], 168);
  EXPECT_EQ(doc["ad"], "563/84");
  EXPECT_EQ(doc["cp"], "1/28");
  EXPECT_EQ(doc["irr_counts"]["3"], 2);
  EXPECT_TRUE(doc["gap_n"].is_null());
  EXPECT_TRUE(doc["perfect"].get<bool>());
}

TEST(Json, ScanDocument) {
  const auto entries = parse_catalog(R"([{"name":"bad","cayley":[[0,1],[0,1]]},
                                          {"name":"S3","kind":"symmetric","params":[3]}])");
  const auto doc = nlohmann::json::parse(scan_json(scan(entries)));
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_TRUE(doc["rows"][0].contains("error"));
  EXPECT_EQ(doc["rows"][1]["report"]["gap_n"], "3");
  EXPECT_EQ(doc["rows"][1]["checks_applicable"], doc["rows"][1]["checks_passed"]);
  EXPECT_EQ(doc["summary"]["errors"], 1);
  EXPECT_TRUE(doc["violations"].empty());
}

}  // namespace
}  // namespace antidiag
