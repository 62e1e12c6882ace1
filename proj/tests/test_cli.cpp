#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "invmaxian/cli.hpp"

using namespace invmaxian;
using namespace invmaxian::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "invmaxian");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("invmaxian_cli_" + name);
}

}  // namespace

TEST(Cli, SolveChebyshev) {
  const auto r = cli({"solve", data_path("t1.json"), "--objective", "chebyshev"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("cost:      1\n"), std::string::npos);
}

TEST(Cli, SolveWeightedJson) {
  const auto r = cli({"solve", data_path("t1_weighted.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "OPTIMAL");
  EXPECT_EQ(doc["cost"], "15/4");
}

TEST(Cli, SolveInfeasible) {
  const auto r = cli({"solve", data_path("t1_infeasible.json")});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.out.find("INFEASIBLE"), std::string::npos);
  EXPECT_NE(r.out.find("violating leaves: v"), std::string::npos);
}

TEST(Cli, PairAndDump) {
  const auto r = cli({"solve", data_path("t1.json"), "--pair", "b", "a", "--dump-lp", "-"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Subject To"), std::string::npos);
  EXPECT_NE(r.out.find("cost:      2"), std::string::npos);
}

TEST(Cli, CheckAcceptsAndRejects) {
  const auto solved = cli({"solve", data_path("t1.json"), "--json"});
  ASSERT_EQ(solved.code, kExitOk);
  const auto good = temp_file("good.json");
  std::ofstream(good) << solved.out;
  EXPECT_EQ(cli({"check", data_path("t1.json"), good.string()}).code, kExitOk);

  auto doc = nlohmann::json::parse(solved.out);
  doc["cost"] = "1";
  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << doc.dump();
  const auto r = cli({"check", data_path("t1.json"), bad.string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.out.find("cost mismatch"), std::string::npos);
}

TEST(Cli, Maxian) {
  const auto r = cli({"maxian", data_path("t1.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], "24");
  EXPECT_EQ(doc["targets_are_maxian"], false);
}

TEST(Cli, Oracle) {
  const auto r = cli({"oracle", data_path("t1_weighted.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("oracle chebyshev: 15/4"), std::string::npos);
  const auto m = cli({"oracle", data_path("t1.json"), "--maxian", "2"});
  EXPECT_NE(m.out.find("value: 24"), std::string::npos);
}

TEST(Cli, GenIsReproducible) {
  const auto x = cli({"gen", "--n", "30", "--seed", "5", "--max-len", "7"});
  const auto y = cli({"gen", "--n", "30", "--seed", "5", "--max-len", "7"});
  const auto z = cli({"gen", "--n", "30", "--seed", "6", "--max-len", "7"});
  EXPECT_EQ(x.code, kExitOk);
  EXPECT_EQ(x.out, y.out);
  EXPECT_NE(x.out, z.out);
}

TEST(Cli, Errors) {
  EXPECT_EQ(cli({"solve", "/nonexistent.json"}).code, kExitError);
  EXPECT_EQ(cli({"solve", data_path("t1.json"), "--bogus"}).code, kExitError);
  EXPECT_EQ(cli({}).code, kExitError);
  const auto r = cli({"solve", data_path("t1.json"), "--pair", "a", "zz"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("error: INVALID_VERTEX"), std::string::npos);
}
