#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun qpl(const std::string& args) {
  const std::string cmd = std::string(QPL_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::ordered_json json_of(const std::string& args) {
  const CliRun r = qpl(args + " --json");
  EXPECT_EQ(r.status, 0) << args;
  return nlohmann::ordered_json::parse(r.out);
}

const nlohmann::ordered_json& result(const nlohmann::ordered_json& j, const std::string& name) {
  for (const auto& e : j["results"]) {
    if (e["name"] == name) return e["value"];
  }
  static const nlohmann::ordered_json missing;
  ADD_FAILURE() << "no result " << name;
  return missing;
}

}  // namespace

TEST(Cli, SeriesQuot2Example) {
  const auto j = json_of("series quot2 --n 2 --r 1");
  EXPECT_EQ(j["command"], "series quot2");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(result(j, "quot2"), nlohmann::ordered_json::array({"1", "1"}));
  const CliRun human = qpl("series quot2 --n 2 --r 1");
  EXPECT_NE(human.out.find("1 + q"), std::string::npos);
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const char* args : {"series hilb2 --n 2 --r 3 --json", "series stable --r 3 --prec 12 --json",
                           "loci bounds --n 16 --r 1 --d 2 --l 2 --json", "bb hilb2 --n 1 --r 2 --json",
                           "count quot --d 2 --n 1 --r 2 --p 2 --json"}) {
    const CliRun r = qpl(args);
    ASSERT_EQ(r.status, 0) << args;
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}

TEST(Cli, CountQuotWorkedValue) {
  const auto j = json_of("count quot --d 2 --n 1 --r 2 --p 2");
  EXPECT_EQ(result(j, "points"), "28");
  EXPECT_EQ(result(j, "raw_total"), "168");
}

TEST(Cli, CountHilb2WorkedValue) {
  const CliRun r = qpl("count hilb2 --n 1 --r 2 --p 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("40"), std::string::npos);
}

TEST(Cli, RcellsCheckPasses) {
  const auto j = json_of("bb rcells --r 2 --m 1 --s 1 --n 2");
  EXPECT_EQ(result(j, "check"), true);
}

TEST(Cli, VerifyAllSmallPasses) {
  const CliRun r = qpl("verify all --max-n 3 --max-r 3 --fields 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("status: pass"), std::string::npos);
}

TEST(Cli, VerifyAllCsv) {
  const CliRun r = qpl("verify all --max-n 1 --max-r 1 --fields 2 --csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("check,params,status\n", 0), 0u);
  EXPECT_EQ(r.out.find(",fail"), std::string::npos);
}

TEST(Cli, LmaxSearchBelowThePeakReportsMismatch) {
  // two generators reach only dimension 4 for d=4, r=2
  EXPECT_EQ(qpl("verify lmax --d 4 --r 2 --p 2 --gens 2").status, 1);
  EXPECT_EQ(qpl("verify lmax --d 2 --r 1 --p 2 --gens 2").status, 0);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(qpl("series hilb2 --n 0 --r 1").status, 2);
  EXPECT_EQ(qpl("series hilb2 --n 1").status, 2);
  EXPECT_EQ(qpl("bogus").status, 2);
  EXPECT_EQ(qpl("bb hilb2 --n 1 --r 1 --side up").status, 2);
  EXPECT_EQ(qpl("count quot --d 2 --n 1 --r 1 --p 4").status, 2);
  EXPECT_EQ(qpl("loci lmax --d 3 --r 2").status, 2);
}

TEST(Cli, BudgetExceededExitsTwo) {
  const std::string prefix = "QPL_MAX_BUDGET=10 ";
  const std::string cmd = prefix + QPL_BINARY + " count quot --d 2 --n 2 --r 2 --p 2 >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(raw));
  EXPECT_EQ(WEXITSTATUS(raw), 2);
}
