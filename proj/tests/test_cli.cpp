#include "process.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace glr {
namespace {

test::ProcessResult glr(const std::string& args) { return test::run_process(std::string(GLR_BINARY) + " " + args); }

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(CliBasis, Examples) {
  auto a = glr("basis --n 2 --p 1,0");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_NE(a.out.find("dim V(1,0) = 2"), std::string::npos);

  auto b = glr("basis --n 2 --p 0,0 --json");
  EXPECT_EQ(b.exit_code, 0);
  const auto j = nlohmann::json::parse(b.out);
  EXPECT_EQ(j["basis"], nlohmann::json::array({"1"}));

  auto c = glr("basis --n 3 --p 2,1,0 --json");
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["dimension"], 8);
}

TEST(CliBasis, UsageErrors) {
  EXPECT_EQ(glr("basis --p 1,2").exit_code, 2);
  EXPECT_EQ(glr("basis --p one").exit_code, 2);
  EXPECT_EQ(glr("basis --n 3 --p 1,0").exit_code, 2);
  EXPECT_EQ(glr("basis").exit_code, 2);
  EXPECT_EQ(glr("").exit_code, 2);
  EXPECT_EQ(glr("frobnicate").exit_code, 2);
}

TEST(CliBasis, DegreeBoundTooSmallIsAFailure) { EXPECT_EQ(glr("basis --p 3,0 --degree-bound 1").exit_code, 1); }

TEST(CliBranch, Examples) {
  auto a = glr("branch --r 1,0 --json");
  EXPECT_EQ(a.exit_code, 0);
  auto ja = nlohmann::json::parse(a.out);
  EXPECT_EQ(ja["components"].size(), 2u);
  EXPECT_EQ(ja["sum"], 2);

  auto b = glr("branch --r 2,1,0 --json");
  EXPECT_EQ(b.exit_code, 0);
  auto jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(jb["components"].size(), 4u);
  EXPECT_EQ(jb["sum"], 8);
  EXPECT_EQ(jb["dim_r"], 8);

  auto c = glr("branch --r 0,0,0");
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_NE(c.out.find("(0,0)  dim 1"), std::string::npos);
  EXPECT_NE(c.out.find("sum 1 = dim V(0,0,0) 1"), std::string::npos);

  EXPECT_EQ(glr("branch --r 0,1").exit_code, 2);
}

TEST(CliKernel, Examples) {
  auto a = glr("kernel --r 1,0 --q 1");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "-z[1,2]");

  auto b = glr("kernel --r 1,0 --q 0 --json");
  EXPECT_EQ(b.exit_code, 0);
  auto jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(jb["kernel"], "1");
  EXPECT_EQ(jb["zhelobenko"], true);

  auto c = glr("kernel --r 2,1 --q 0");
  EXPECT_EQ(c.exit_code, 2);
  EXPECT_TRUE(c.out.empty());
}

TEST(CliVerify, SmallSuitesPass) {
  auto a = glr("verify --suite relations --n 1");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(glr("verify --suite pluecker --n 3").exit_code, 0);
  EXPECT_EQ(glr("verify --suite intertwiner --n 2 --max-entry 3").exit_code, 0);
}

TEST(CliVerify, JsonLinesParseIndependently) {
  auto r = glr("verify --suite pluecker --n 3 --json");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["elapsed_ms"], 0);
    EXPECT_TRUE(j.contains("check"));
    EXPECT_TRUE(j["params"].is_object());
    ++n;
  }
  EXPECT_EQ(n, count_lines(r.out));
  EXPECT_GT(n, 3u);
}

TEST(CliVerify, SeedIsEchoedAndDeterministic) {
  const std::string cmd = "verify --suite invariance --n 1 --max-entry 1 --seed 11 --json";
  auto a = glr(cmd);
  auto b = glr(cmd);
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"seed\":11"), std::string::npos);
  auto c = glr("verify --suite invariance --n 1 --max-entry 1 --seed 12 --json");
  EXPECT_NE(a.out, c.out);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(glr("verify --suite nonsense").exit_code, 2);
  EXPECT_EQ(glr("verify --n 0").exit_code, 2);
  EXPECT_EQ(glr("verify --max-entry -1").exit_code, 2);
}

}  // namespace
}  // namespace glr
