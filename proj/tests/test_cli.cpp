#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "mcsl/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mcsl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CslCommand) {
  const CliRun r = cli({"csl", "--quat", "2,2,2,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("sigma"), 3);
  EXPECT_EQ(j.at("hnf"), json::parse("[[1,1,3],[0,2,2],[0,0,6]]"));
  for (const char* key : {"quat", "sigma", "hnf", "ideal_hnf", "decomposition"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.size(), 5u);
}

TEST(Cli, HalfFlag) {
  EXPECT_EQ(cli({"csl", "--half", "--quat", "1,1,1,0"}).out, cli({"csl", "--quat", "2,2,2,0"}).out);
  EXPECT_EQ(cli({"csl", "--quat", "(1 1 1 0)"}).out, cli({"csl", "--quat", "2,2,2,0"}).out);
}

TEST(Cli, RotIdentity) {
  const CliRun r = cli({"rot", "--quat", "2,0,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("sigma"), 1);
  EXPECT_EQ(j.at("matrix"), json::parse(R"([["1/1","0/1","0/1"],["0/1","1/1","0/1"],["0/1","0/1","1/1"]])"));
}

TEST(Cli, CensusF) {
  const CliRun r = cli({"census", "f", "--max", "15", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "sigma,count,formula,match\n"
            "1,1,1/1,true\n3,4,4/1,true\n5,6,6/1,true\n7,8,8/1,true\n"
            "9,12,12/1,true\n11,12,12/1,true\n13,14,14/1,true\n15,24,24/1,true\n");
  const json j = json::parse(cli({"census", "f", "--max", "15"}).out);
  ASSERT_EQ(j.size(), 8u);
  for (const auto& row : j) EXPECT_TRUE(row.at("match").get<bool>());
}

TEST(Cli, CensusF2ReportsAnomalyWithoutFailing) {
  const CliRun r = cli({"census", "f2", "--prime", "3", "--power", "1", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sigma,count,formula,match\n3,4,109/27,false\n");
  const CliRun sq = cli({"census", "f2", "--prime", "3", "--power", "2", "--format", "table"});
  EXPECT_EQ(sq.code, 0);
  EXPECT_NE(sq.out.find("18"), std::string::npos);
}

TEST(Cli, McslGcldLcrm) {
  const CliRun m = cli({"mcsl", "--quats", "2,2,2,0;2,2,-2,0"});
  ASSERT_EQ(m.code, 0) << m.err;
  const json j = json::parse(m.out);
  EXPECT_EQ(j.at("sigma"), 9);
  EXPECT_EQ(j.at("quat").size(), 2u);
  const json g = json::parse(cli({"gcld", "--q1", "2,2,2,0", "--q2", "-2,2,0,-2"}).out);
  EXPECT_EQ(g.at("norm"), 3);
  const json l = json::parse(cli({"lcrm", "--q1", "2,2,2,0", "--q2", "2,2,-2,0"}).out);
  EXPECT_EQ(l.at("norm"), 9);
  EXPECT_EQ(l.at("quat"), json::parse("[0,0,0,6]"));
}

TEST(Cli, DeterministicAcrossJobs) {
  EXPECT_EQ(cli({"census", "f", "--max", "45", "--jobs", "1"}).out, cli({"census", "f", "--max", "45", "--jobs", "3"}).out);
}

TEST(Cli, CacheColdAndWarmIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "mcsl-cli-cache-test";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args{"census", "f2", "--prime", "5", "--power", "2", "--cache-dir", dir.string()};
  const CliRun cold = cli(args);
  ASSERT_TRUE(std::filesystem::exists(dir / "census-f2-25.json"));
  const CliRun warm = cli(args);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, cli({"census", "f2", "--prime", "5", "--power", "2"}).out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({"csl"}).code, 2);
  EXPECT_EQ(cli({"csl", "--quat", "1,0,0,0"}).code, 2);
  EXPECT_EQ(cli({"csl", "--quat", "0,0,0,0"}).code, 2);
  EXPECT_EQ(cli({"census", "f2", "--prime", "4", "--power", "2"}).code, 2);
  EXPECT_EQ(cli({"census", "f", "--max", "9", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"verify", "all", "--level", "huge"}).code, 2);
  const CliRun bad = cli({"gcld", "--q1", "0,0,0,0", "--q2", "0,0,0,0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(cli({"--help"}).code, 0);
}
