#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "dyn/arith/poly_json.hpp"
#include "dyn/classify/families.hpp"
#include "dyn/cli/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun dyn_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dyn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json dyn_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--output", "json"});
  CliRun r = dyn_run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, ClassifyExample) {
  json j = dyn_json({"classify", "--family", "no-auto", "--n", "3", "--v", "9/2"});
  EXPECT_EQ(j["status"], "certified");
  EXPECT_EQ(j["labels"], json::array({"C"}));
  EXPECT_EQ(j["v"], "9/2");
}

TEST(Cli, GroupInfoExample) {
  json j = dyn_json({"group", "--family", "no-auto", "--n", "3", "--label", "W", "--info"});
  EXPECT_EQ(j["order"], 18);
  EXPECT_EQ(j["degrees"], json::array({6}));
  EXPECT_EQ(j["root_density"], "5/18");
  EXPECT_EQ(j["no_root_density"], "13/18");
}

TEST(Cli, GroupSetQueries) {
  json d = dyn_json({"group", "--family", "no-auto", "--n", "4", "--density", "--set", "P"});
  EXPECT_EQ(d["max_root_density"], "5/8");
  EXPECT_EQ(d["no_root_bound"], "3/8");
  json r = dyn_json({"group", "--family", "no-auto", "--n", "4", "--density", "--set", "R"});
  EXPECT_EQ(r["max_root_density"], "39/64");
  json g = dyn_json({"group", "--family", "no-auto", "--n", "4", "--degrees", "--set", "P"});
  EXPECT_EQ(g["degrees"], json::array({2, 4, 6, 8, 12}));
  json s = dyn_json({"group", "--family", "auto", "--n", "3", "--subgroups"});
  EXPECT_EQ(s["count"], 9);
  EXPECT_EQ(s["classes"].back()["name"], "W");
}

TEST(Cli, DynatomicSymbolicMatchesStored) {
  json j = dyn_json({"dynatomic", "--family", "auto", "--n", "3", "--symbolic"});
  EXPECT_EQ(j["terms"], dyn::to_json(dyn::stored_phi3(dyn::Family::Auto)));
  json v = dyn_json({"dynatomic", "--family", "no-auto", "--n", "3", "--v", "9/2"});
  EXPECT_EQ(v["degree"], 6);
}

TEST(Cli, OtherSubcommands) {
  json s = dyn_json({"scan", "--family", "no-auto", "--v", "2", "--max-n", "4"});
  EXPECT_EQ(s["periods"][1]["points"], json::array({"0", "infinity"}));
  EXPECT_TRUE(s["periods"][2]["points"].empty());
  json m = dyn_json({"milnor", "--map", "1/x^2"});
  EXPECT_EQ(m["r"], "-6");
  EXPECT_EQ(m["s"], "12");
  EXPECT_TRUE(m["on_c2"].get<bool>());
  EXPECT_TRUE(m["on_symmetry_locus"].get<bool>());
  json nf = dyn_json({"normal-form", "--map", "7*(x-1)/x^2"});
  EXPECT_EQ(nf["normal_form"]["family"], "no-auto");
  EXPECT_EQ(nf["normal_form"]["v"], "7");
  json id = dyn_json({"identify", "--coeffs", "81,-243,324,-261,135,-36,4", "--family", "no-auto", "--n", "3"});
  EXPECT_EQ(id["best"], "C");
  EXPECT_EQ(id["sample"]["good_primes"], 300);
}

TEST(Cli, ExitCodes) {
  CliRun excluded = dyn_run({"classify", "--family", "auto", "--n", "3", "--v", "4"});
  EXPECT_EQ(excluded.code, 1);
  EXPECT_TRUE(excluded.out.empty());
  EXPECT_EQ(json::parse(excluded.err)["error"]["kind"], "ExcludedParameter");
  EXPECT_EQ(dyn_run({"classify", "--family", "auto", "--n", "5", "--v", "2"}).code, 2);
  EXPECT_EQ(dyn_run({"classify", "--family", "auto", "--n", "3"}).code, 2);
  EXPECT_EQ(dyn_run({"classify", "--family", "neither", "--n", "3", "--v", "2"}).code, 2);
  EXPECT_EQ(dyn_run({"classify", "--family", "auto", "--n", "3", "--v", "x"}).code, 2);
  EXPECT_EQ(dyn_run({"group", "--family", "auto", "--n", "3", "--label", "Q"}).code, 2);
  EXPECT_EQ(dyn_run({"group", "--family", "auto", "--n", "3", "--info", "--subgroups"}).code, 2);
  EXPECT_EQ(dyn_run({}).code, 2);
  EXPECT_EQ(dyn_run({"--help"}).code, 0);
}

TEST(Cli, FactorEffortIsReported) {
  std::string v = "1/" + std::to_string(1000003LL * 1000033LL);
  CliRun r = dyn_run({"--factor-effort", "1", "classify", "--family", "no-auto", "--n", "3", "--v", v, "--no-identify"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "IntegerFactorizationEffortExceeded");
  EXPECT_EQ(dyn_run({"classify", "--family", "no-auto", "--n", "3", "--v", v, "--no-identify"}).code, 0);
}

TEST(Cli, OutputIsByteStable) {
  std::vector<std::string> args = {"--prime-budget", "60", "classify", "--family", "no-auto", "--n", "4", "--v", "25/6"};
  for (const char* fmt : {"json", "table"}) {
    std::vector<std::string> a = args;
    a.insert(a.begin(), {"--output", fmt});
    CliRun first = dyn_run(a), second = dyn_run(a);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
  }
}
