#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace antidiag::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("antidiag_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ComputeDihedral) {
  const auto r = call({"compute", "--family", "dihedral", "--param", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("9/5 (1.800000)"), std::string::npos) << r.out;
}

TEST(Cli, ComputeSpecialLinear) {
  const auto r = call({"compute", "--family", "sl2", "--param", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("9/2 (4.500000)"), std::string::npos) << r.out;
}

TEST(Cli, ComputeCyclicJson) {
  const auto r = call({"compute", "--family", "cyclic", "--param", "17", "--json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"ad\": \"1\""), std::string::npos) << r.out;
}

TEST(Cli, ComputeCatalogEntry) {
  const auto r = call({"compute", "--entry", "PSL(2,7)"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("563/84"), std::string::npos);
}

TEST(Cli, TableSymmetric) {
  const auto r = call({"table", "--family", "symmetric", "--param", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("degrees 1,1,2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("X.3"), std::string::npos);
  EXPECT_EQ(r.out.find("X.4"), std::string::npos);
}

TEST(Cli, TableCyclicUsesZeta) {
  const auto r = call({"table", "--family", "cyclic", "--param", "4", "--approx"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("-z"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("+1.0000i"), std::string::npos) << r.out;
}

TEST(Cli, TableAlternating) {
  const auto r = call({"table", "--family", "alternating", "--param", "5", "--approx"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("degrees 1,3,3,4,5"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1.618"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("-0.618"), std::string::npos) << r.out;
}

TEST(Cli, TableAboveCapFails) {
  const auto r = call({"table", "--entry", "A5xA5"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ConstructionFailures) {
  EXPECT_EQ(call({"compute", "--family", "nonsense"}).code, kUsage);
  EXPECT_EQ(call({"compute", "--family", "sl2", "--param", "6"}).code, kUsage);
  EXPECT_EQ(call({"compute", "--family", "symmetric", "--param", "6", "--cap", "100"}).code, kUsage);
  EXPECT_EQ(call({"compute", "--family", "product"}).code, kUsage);
  EXPECT_EQ(call({"compute"}).code, kUsage);
  EXPECT_EQ(call({"compute", "--entry", "nope"}).code, kUsage);
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
}

TEST(Cli, Help) {
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, Families) {
  const auto r = call({"families"});
  EXPECT_EQ(r.code, kOk);
  for (const char* name : {"cyclic", "dihedral", "sl2", "extraspecial", "affine", "psl2_7"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, VerifyMissingCatalog) {
  const auto r = call({"verify", "missing.json"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("missing.json"), std::string::npos);
}

TEST(Cli, MalformedCatalog) {
  const auto path = temp_file("bad.json");
  std::ofstream(path) << R"([{"name":"X","params":[3]}])";
  EXPECT_EQ(call({"scan", path.string()}).code, kUsage);
  std::filesystem::remove(path);
}

TEST(Cli, ScanWritesCsv) {
  const auto path = temp_file("scan.csv");
  const auto r = call({"scan", "bundled", "--csv", path.string(), "--jobs", "0"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const std::string csv = slurp(path);
  EXPECT_NE(csv.find("\nA5,60,61/15,4.066667,1/12,4/15,1;3;4;5,60,60,false,true,\n"),
            std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyBundled) {
  const auto summary = temp_file("summary.txt");
  const auto r = call({"verify", "bundled", "--summary", summary.string(), "--jobs", "0"});
  EXPECT_EQ(r.code, kOk) << r.out;
  const std::string text = slurp(summary);
  for (const char* check : {"gap theorem", "solvability threshold", "hoelder", "centre index 4"})
    EXPECT_NE(text.find(check), std::string::npos) << check;
  EXPECT_NE(text.find("result: PASS"), std::string::npos);
  EXPECT_NE(text.find("D6  AD=5/3  n=3"), std::string::npos);
  EXPECT_NE(text.find("D8  AD=3/2  n=2"), std::string::npos);
  EXPECT_NE(text.find("D10  AD=9/5  n=5"), std::string::npos);
  std::filesystem::remove(summary);
}

TEST(Cli, VerifyFailsOnBrokenEntry) {
  const auto path = temp_file("broken.json");
  std::ofstream(path) << R"([{"name":"S3","kind":"symmetric","params":[3]},
                             {"name":"bad","cayley":[[0,1],[0,1]]}])";
  EXPECT_EQ(call({"scan", path.string()}).code, kOk);
  EXPECT_EQ(call({"verify", path.string()}).code, kViolation);
  std::filesystem::remove(path);
}

TEST(Cli, ExportJsonAndCsv) {
  const auto path = temp_file("tiny.json");
  std::ofstream(path) << R"([{"name":"D10","kind":"dihedral","params":[5]}])";
  const auto csv = call({"export", path.string()});
  EXPECT_EQ(csv.code, kOk);
  EXPECT_NE(csv.out.find("D10,10,9/5,1.800000"), std::string::npos) << csv.out;
  const auto json = call({"export", path.string(), "--json"});
  EXPECT_EQ(json.code, kOk);
  EXPECT_NE(json.out.find("\"ad\": \"9/5\""), std::string::npos) << json.out;
  std::filesystem::remove(path);
}

TEST(Cli, UnwritableCsvPath) {
  EXPECT_EQ(call({"export", "bundled", "--csv", "/nonexistent/dir/out.csv"}).code, kUsage);
}

}  // namespace
}  // namespace antidiag::cli
