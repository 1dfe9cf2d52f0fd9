#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using namespace evenpath;

namespace {

struct outcome {
  int code;
  std::string out;
  std::string err;
};

outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "evenpath");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json first_line(const std::string& s) { return json::parse(s.substr(0, s.find('\n'))); }

}  // namespace

TEST(Cli, CertifyTriangle) {
  const auto r = run({"certify", "--graph6", "Bw", "--k", "1", "--variant", "B"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out)["order"], 3);
}

TEST(Cli, CertifyConditionNotMet) {
  // K_{1,4} with A = {centre}
  const std::string star = to_graph6(named::star(4));
  const auto r = run({"certify", "--graph6", star, "--A", "0", "--k", "1", "--variant", "B"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(first_line(r.out)["margin"], -1);
}

TEST(Cli, CertifyTraceEmitsOneLinePerStep) {
  const auto r = run({"certify", "--construct", "join:2,7", "--A", "0,1", "--k", "1", "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  const json head = json::parse(line);
  std::size_t steps = 0;
  while (std::getline(lines, line)) {
    const json step = json::parse(line);
    EXPECT_EQ(step["step"], steps);
    ++steps;
  }
  EXPECT_EQ(head["steps"], steps);
  EXPECT_GT(steps, 0u);
}

TEST(Cli, ParseAndUsageErrors) {
  EXPECT_EQ(run({"certify", "--graph6", "B!", "--k", "1"}).code, 64);
  EXPECT_EQ(run({"certify", "--k", "1"}).code, 64);
  EXPECT_EQ(run({"certify", "--graph6", "Bw", "--k", "1", "--A", "0,9"}).code, 64);
  EXPECT_EQ(run({"certify", "--graph6", "Bw", "--k", "1", "--variant", "C"}).code, 64);
  EXPECT_EQ(run({"check", "--graph6", "Bw", "--construct", "join:1,3"}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"phi", "--output", "xml"}).code, 64);
}

TEST(Cli, CheckC5AllHold) {
  const auto r = run({"check", "--graph6", to_graph6(named::cycle(5)), "--k", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  const json j = first_line(r.out);
  ASSERT_EQ(j["reports"].size(), 4u);
  for (const auto& rep : j["reports"]) {
    EXPECT_TRUE(rep["applicable"].get<bool>());
    EXPECT_TRUE(rep["holds"].get<bool>());
  }
}

TEST(Cli, CheckK4NotApplicable) {
  const auto r = run({"check", "--graph6", "C~", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  for (const auto& rep : first_line(r.out)["reports"]) {
    EXPECT_FALSE(rep["applicable"].get<bool>());
    EXPECT_EQ(rep["forbidden_cycle"].size(), 4u);
  }
}

TEST(Cli, CheckEmptyGraphAndErdosGallai) {
  auto r = run({"check", "--graph6", "D??", "--k", "2", "--with-erdos-gallai"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out)["reports"].size(), 5u);
  // K4 is C6-free but already beats the closed-form edge bound at k = 2.
  r = run({"check", "--graph6", "C~", "--k", "2", "--with-erdos-gallai", "--output", "csv"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("erdos-gallai,2"), std::string::npos);
}

TEST(Cli, CheckReportsFailingClosedFormEdgeBound) {
  // K3 is C4-free but exceeds -kn + n sqrt(k(n-1)+k^2) for k = 1.
  const auto r = run({"check", "--graph6", "Bw", "--k", "1", "--output", "plain"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("edge-bound: FAILS"), std::string::npos);
}

TEST(Cli, CheckFileWithSeveralGraphs) {
  const std::string path = testing::TempDir() + "graphs.g6";
  std::ofstream(path) << ">>graph6<<DQc\nC~\n";
  const auto r = run({"check", "--file", path, "--k", "1"});
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_EQ(run({"certify", "--file", path, "--k", "1"}).code, 64);
}

TEST(Cli, Phi) {
  const auto r = run({"phi", "--k", "1", "--p", "2", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out)["phi"], 18);
  EXPECT_EQ(run({"phi", "--n", "20"}).code, 65);
  const auto plain = run({"phi", "--k", "1", "--p", "2", "--n", "3", "--output", "plain"});
  EXPECT_EQ(plain.out, "phi(1,2,3) = 12\nBw\n");
}

TEST(Cli, PhiJsonIdenticalAcrossThreads) {
  const auto a = run({"phi", "--k", "2", "--p", "3", "--n", "6", "--threads", "1"});
  const auto b = run({"phi", "--k", "2", "--p", "3", "--n", "6", "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Sweep) {
  const auto r = run({"sweep", "--n-max", "4", "--k-max", "1"});
  EXPECT_EQ(r.code, 0);
  const json j = first_line(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["total"]["failure_count"], 0);
  EXPECT_EQ(run({"sweep", "--kind", "fuzz", "--n", "8", "--samples", "200"}).code, 0);
  EXPECT_EQ(run({"sweep", "--kind", "erdos-gallai", "--n", "5", "--k", "2"}).code, 0);
  EXPECT_EQ(run({"sweep", "--kind", "nope"}).code, 64);
  EXPECT_EQ(run({"sweep", "--n-max", "13"}).code, 65);
}

TEST(Cli, TrendAndSharpness) {
  auto r = run({"trend", "--k", "1", "--p", "2", "--n-min", "3", "--n-max", "4", "--output", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,phi,ratio,lower_ratio");
  r = run({"sharpness", "--k", "1", "--variant", "B", "--n-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(first_line(r.out).contains("witnesses"));
  EXPECT_EQ(run({"sharpness", "--n-max", "9"}).code, 65);
}

#ifdef EVENPATH_CLI_PATH
TEST(Cli, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(EVENPATH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("certify --graph6 Bw --k 1"), 0);
  EXPECT_EQ(status("certify --graph6 'D?{' --A 0 --k 1"), 2);
  EXPECT_EQ(status("certify --graph6 '!!' --k 1"), 64);
  EXPECT_EQ(status("phi --n 20"), 65);
  EXPECT_EQ(status("--help"), 0);
}
#endif
