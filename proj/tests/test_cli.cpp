#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/cli.hpp"

using namespace nilmetriq;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;

  json body() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nilmetriq_test_cli_" + name);
}

}  // namespace

TEST_CASE("classify") {
  auto all = run({"classify", "all"});
  REQUIRE(all.code == 0);
  auto j = all.body();
  CHECK(j["schema_version"] == 1);
  CHECK(j["counts"]["csla"] == 23);
  CHECK(j["counts"]["cslat"] == 20);
  CHECK(j["algebras"].size() == 34);

  auto h15 = run({"classify", "h15"}).body()["algebras"][0];
  CHECK(h15["csla"] == true);
  CHECK(h15["cslat"] == false);
  CHECK(run({"classify", "h1"}).body()["algebras"][0]["csla"] == false);
  CHECK(run({"classify", "H_28"}).body()["algebras"][0]["name"] == "h28");

  // A tuple in place of a name.
  auto t = run({"classify", "(0,0,12,13,14,15)"});
  REQUIRE(t.code == 0);
  CHECK(t.body()["algebras"][0]["step"] == 5);

  auto bad = run({"classify", "h99"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("unknown algebra") != std::string::npos);
  CHECK(run({"classify", "(0,0,1x)"}).code == cli::kUsage);
  CHECK(run({"classify", "all", "--format", "csv"}).out.rfind("name,step,csla,cslat,dim_der,diag_dim\nh1,1,0,0,36,", 0) == 0);
}

TEST_CASE("sigma, aut and isotropy") {
  auto s = run({"sigma", "h9"}).body();
  CHECK(s["parameter_count"] == 6);
  CHECK(s["parameters"][0]["position"] == "(3,3)");
  CHECK(s["matrix"][2][2] == "s0");
  CHECK(s["matrix"][0][0] == "1");

  auto fixed = run({"sigma", "h13", "--fixed-points"}).body();
  CHECK(fixed["empty"] == true);
  auto f24 = run({"sigma", "h24", "--fixed-points"}).body();
  CHECK(f24["empty"] == false);

  auto a = run({"aut", "h28"}).body();
  CHECK(a["dim_der"] == 11);
  CHECK(a["component_group"]["label"] == "Z2^2");
  CHECK(a["component_group"]["order"] == 4);
  CHECK(run({"aut", "h15"}).code == cli::kUsage);

  auto iso = run({"isotropy", "h9"}).body();
  CHECK(iso["group"]["label"] == "Z2^3");
  CHECK(iso["point"]["s0"] == "1");
  auto iso12 = run({"isotropy", "h12", "--set", "s0=1/2,s1=2", "--set", "s3=-3"}).body();
  CHECK(iso12["group"]["label"] == "trivial");
  CHECK(iso12["point"]["s0"] == "1/2");
}

TEST_CASE("sweep output is deterministic") {
  auto a = run({"sweep", "h12", "--zeros", "2", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.body()["tally"] == json{{"trivial", 8}, {"Z2", 2}});
  CHECK(a.body()["rows"].size() == 10);
  CHECK(a.out == run({"sweep", "h12", "--zeros", "2", "--seed", "7"}).out);
  auto csv = run({"sweep", "h12", "--zeros", "2", "--seed", "7", "--format", "csv"});
  CHECK(csv.out.rfind("algebra,p,subset,group_label\nh12,2,s0;s1,", 0) == 0);
  CHECK(run({"sweep", "h12", "--zeros", "9"}).code == cli::kUsage);
  CHECK(run({"sweep", "h12"}).code == cli::kUsage);
}

TEST_CASE("symmetry and theorem checks") {
  auto s = run({"symmetry", "h9", "--zero", "s2"});
  REQUIRE(s.code == 0);
  auto j = s.body();
  CHECK(j["index"] == 1);
  CHECK(j["basis"] == json::array({json::array({"0", "0", "0", "1", "0", "0"})}));
  CHECK(j["central"] == true);
  CHECK(run({"symmetry", "h9", "--set", "s2=1"}).body()["index"] == 0);
  CHECK(run({"symmetry", "h28", "--metric", "1,1,1,1,1,1"}).body()["index"] == 1);
  CHECK(run({"symmetry", "h28", "--metric", "1,1,1"}).code == cli::kUsage);
  CHECK(run({"symmetry", "h28", "--metric", "1,1,1,1,1,1", "--zero", "s1"}).code == cli::kUsage);

  auto t = run({"theorem", "h9", "--samples", "5", "--seed", "3"});
  CHECK(t.code == 0);
  CHECK(t.body()["pass"] == true);
  CHECK(run({"theorem", "nope"}).code == cli::kUsage);
}

TEST_CASE("ricci and nilsoliton") {
  auto r = run({"ricci", "h1", "--metric", "1,2,3,4,5,6"}).body();
  for (const auto& row : r["operator"])
    for (const auto& x : row) CHECK(x == "0");
  auto h28 = run({"ricci", "h28"}).body();
  CHECK(h28["mode"] == "exact");
  CHECK(h28["trace"].get<std::string>().front() == '-');

  // Non-diagonal metric: exact mode refuses, approximate mode works.
  std::vector<std::string> sigma{"ricci", "h28", "--set", "s1=1/2"};
  auto refused = run(sigma);
  CHECK(refused.code == cli::kUsage);
  CHECK(refused.err.find("approximate") != std::string::npos);
  sigma.insert(sigma.end(), {"--mode", "approximate"});
  auto approx = run(sigma);
  REQUIRE(approx.code == 0);
  CHECK(approx.body()["operator"][0][0].is_number());
  CHECK(approx.body()["condition"].get<double>() >= 1.0);

  auto n = run({"nilsoliton", "h28", "--r", "24"});
  REQUIRE(n.code == 0);
  auto nj = n.body();
  CHECK(nj["nilsoliton"] == true);
  CHECK(nj["residual"] == "0");
  CHECK(nj["metric"][5][5] == "576");

  CHECK(run({"nilsoliton", "h22", "--witness"}).body()["nilsoliton"] == true);
  CHECK(run({"nilsoliton", "h10", "--metric", "1,1,1,2,1,4"}).body()["nilsoliton"] == true);
  auto id = run({"nilsoliton", "h10", "--metric", "1,1,1,1,1,1"}).body();
  CHECK(id["nilsoliton"] == false);
  CHECK(id["residual"] != "0");
  auto ap = run({"nilsoliton", "h9", "--witness", "--mode", "approximate"}).body();
  CHECK(ap["nilsoliton"] == true);

  auto u = run({"nilsoliton", "h22", "--r", "2"});
  CHECK(u.code == cli::kUsage);
  CHECK(u.body()["status"] == "unsupported");
  CHECK(run({"nilsoliton", "h9", "--r", "2", "--metric", "1,1,1,1,1,1"}).code == cli::kUsage);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"isotropy", "h9", "--set", "s0=-1"}).code == cli::kUsage);
  CHECK(run({"isotropy", "h9", "--set", "s0=abc"}).code == cli::kUsage);
  CHECK(run({"isotropy", "h9", "--set", "s0"}).code == cli::kUsage);
  CHECK(run({"isotropy", "h9", "--set", "s42=1"}).code == cli::kUsage);
  CHECK(run({"ricci", "h9", "--metric", "1,1,0,1,1,1"}).code == cli::kUsage);
  CHECK(run({"sigma", "h9", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("formats") {
  auto table = run({"nilsoliton", "h28", "--r", "24", "--format", "table"});
  CHECK(table.out.find("c = -11") != std::string::npos);
  auto csv = run({"nilsoliton", "h28", "--r", "24", "--format", "csv"});
  CHECK(csv.out == "nilsoliton,c,residual\n1,-11,0\n");
  std::ostringstream out, err;
  cli::run({"sigma", "h9"}, out, err, true);
  CHECK(out.str().find("6 parameters, 3 off-diagonal") != std::string::npos);
}

TEST_CASE("golden mode with --expect") {
  auto path = temp_file("golden.json");
  auto first = run({"symmetry", "h10", "--set", "s1=1,s3=1,s4=1"});
  REQUIRE(first.code == 0);
  std::ofstream(path) << first.out;
  CHECK(run({"symmetry", "h10", "--set", "s1=1,s3=1,s4=1", "--expect", path.string()}).code == 0);
  auto other = run({"symmetry", "h10", "--expect", path.string()});
  CHECK(other.code == cli::kExpectMismatch);
  CHECK(other.err.find("mismatch") != std::string::npos);
  CHECK(run({"symmetry", "h10", "--expect", temp_file("missing.json").string()}).code == cli::kUsage);
  std::filesystem::remove(path);
}

TEST_CASE("catalog override through the environment") {
  auto cat = builtin_catalog();
  std::vector<CatalogEntry> few(cat.begin() + 20, cat.begin() + 23);
  auto path = temp_file("catalog.json");
  std::ofstream(path) << catalog_to_json(few).dump();
  ::setenv("NILMETRIQ_CATALOG", path.c_str(), 1);
  auto j = run({"classify", "all"});
  ::unsetenv("NILMETRIQ_CATALOG");
  std::filesystem::remove(path);
  REQUIRE(j.code == 0);
  CHECK(j.body()["algebras"].size() == 3);
  CHECK(j.body()["algebras"][0]["name"] == few[0].name);
}

TEST_CASE("verify-paper") {
  auto ok = run({"verify-paper", "1", "2"});
  CHECK(ok.code == 0);
  auto j = ok.body();
  CHECK(j["pass"] == true);
  CHECK(j["criteria"].size() == 2);
  CHECK(j["criteria"][0]["checks"].get<int>() > 0);
  CHECK(run({"verify-paper", "11"}).code == cli::kUsage);
  // The printed h13 generators close to a group of order 8, so this criterion reports a failure.
  auto groups = run({"verify-paper", "5"});
  CHECK(groups.code == cli::kVerificationFailed);
  CHECK(groups.body()["criteria"][0]["failures"][0].get<std::string>().find("h13") != std::string::npos);
}
