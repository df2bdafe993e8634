#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = kleinian::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyReportShape) {
  const auto r = run({"verify", "zr", "--r", "2", "--max", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* k : {"command", "parameters", "status", "witness", "constants", "details"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_FALSE(j.contains("duration_ms"));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["witness"].is_null());
}

TEST(Cli, TimingAddsDuration) {
  const auto r = run({"verify", "jacobi", "--max", "8", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("duration_ms"));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const std::vector<std::string> args : {std::vector<std::string>{"verify", "subst-a", "--r", "3", "--J", "1", "--max", "8"},
                                              std::vector<std::string>{"verify", "core-confluence", "--r", "2", "--max", "8"},
                                              std::vector<std::string>{"series", "zdr", "--r", "4", "--max", "6"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"decompose", "--r", "2", "--partition", "1,3"}).code, 2);
  EXPECT_EQ(run({"verify", "zr", "--r", "two"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, UnsupportedInputExitsTwo) {
  const auto r = run({"verify", "subst-d", "--r", "4", "--J", "2", "--max", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unsupported"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DecomposeExample) {
  const auto r = run({"decompose", "--r", "2", "--partition", "4,2,2,1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["core"], nlohmann::json::parse("[4,2]"));
  EXPECT_EQ(j["quotient_total"], 1);
}

TEST(Cli, EnumerateCsvHasHeader) {
  const auto r = run({"enumerate", "partitions", "--r", "1", "--max", "3", "--csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t lines = 0;
  std::getline(in, line);
  EXPECT_NE(line.find("weight"), std::string::npos);
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 7u);
}

TEST(Cli, SeriesOutputParses) {
  const auto r = run({"series", "boulet", "--max", "4"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["variables"].size(), 4u);
}
