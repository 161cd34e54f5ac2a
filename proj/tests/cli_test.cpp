#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = galtwist::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, OrderTorus) {
  const auto r = run({"order", "gm:p=5,m=1", "--r", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["twisted_order"], 21);
  EXPECT_EQ(r.doc()["input"]["spec"], "gm:p=5,m=1");
  EXPECT_TRUE(r.doc()["timing"].contains("seconds"));
}

TEST(Cli, BruteforceMatchesOrder) {
  const auto r = run({"bruteforce", "gm:p=5", "--r", "6", "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["count"], 21);
  const auto e = run({"bruteforce", "ec:p=5,a=1,b=1", "--r", "2", "--elements"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.doc()["result"]["elements"].size(), 3U);
}

TEST(Cli, CharpolyDescendingInput) {
  const auto r = run({"charpoly", "--f", "1,-5", "--r", "6", "--d", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["coefficients"], json({25, -5, 1}));
}

TEST(Cli, PermsCountStar) {
  const auto r = run({"perms", "cyclic:6", "--count-star"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["condition_star"], 12);
  const auto full = run({"perms", "cyclic:4"});
  EXPECT_EQ(full.doc()["result"]["stabilizing"], 8);
}

TEST(Cli, IdealDocument) {
  const auto r = run({"ideal", "cyclic:6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc()["result"];
  EXPECT_EQ(doc["elements"].size(), 6U);
  EXPECT_EQ(doc["twist_ideal"]["rank"], 2);
  EXPECT_EQ(doc["twist_ideal"]["saturated"], true);
  EXPECT_EQ(doc["annihilator"]["rank"], 4);
  EXPECT_EQ(doc["isotypic"].size(), 4U);
  const auto d = run({"ideal", "dihedral:5"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.doc()["result"]["semidirect_ideal"]["rank"], 4);
}

TEST(Cli, TableOutput) {
  const auto r = run({"order", "gm:p=2", "--r", "6", "--table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result.twisted_order"), std::string::npos);
  EXPECT_NE(r.out.find(" 3\n"), std::string::npos);
}

TEST(Cli, VerifySingleSuite) {
  const auto r = run({"verify", "semidirect"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.doc()["result"]["passed"], true);
  EXPECT_EQ(r.doc()["result"]["suites"][0]["id"], 7);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"order", "gm:p=x", "--r", "2"}).code, galtwist::cli::kParse);
  EXPECT_EQ(run({"order", "--r", "2"}).code, galtwist::cli::kParse);
  EXPECT_EQ(run({"frobnicate"}).code, galtwist::cli::kParse);
  EXPECT_EQ(run({"charpoly", "--f", "1,x", "--r", "2"}).code, galtwist::cli::kParse);
  EXPECT_EQ(run({"order", "gm:p=4", "--r", "2"}).code, galtwist::cli::kPrecondition);
  EXPECT_EQ(run({"charpoly", "--f", "2,1", "--r", "2"}).code, galtwist::cli::kPrecondition);
  EXPECT_EQ(run({"charpoly", "--f", "1,1", "--r", "6", "--d", "4"}).code, galtwist::cli::kPrecondition);
  EXPECT_EQ(run({"verify", "nonsense"}).code, galtwist::cli::kPrecondition);
  EXPECT_EQ(run({"bruteforce", "gm:p=13", "--r", "7"}).code, galtwist::cli::kResource);
  EXPECT_EQ(run({"perms", "cyclic:11"}).code, galtwist::cli::kResource);
  const auto err = run({"order", "gm:p=4", "--r", "2"});
  EXPECT_EQ(json::parse(err.err)["error"]["type"], "precondition");
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv("GALTWIST_WORKERS", "2", 1);
  const auto r = run({"bruteforce", "gm:p=3", "--r", "4"});
  ::unsetenv("GALTWIST_WORKERS");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["input"]["workers"], 2);
  EXPECT_EQ(r.doc()["result"]["count"], 10);
  ::setenv("GALTWIST_WORKERS", "zero", 1);
  EXPECT_EQ(run({"bruteforce", "gm:p=3", "--r", "4"}).code, galtwist::cli::kParse);
  ::unsetenv("GALTWIST_WORKERS");
}
