#include "support.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qmtest;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QMPOLAR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, ScenarioVerifyPasses) {
  for (const auto& name : scenario_names()) {
    const auto r = run("scenario " + name + " --verify");
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
    EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>());
  }
}

TEST(Cli, ScenarioEmitsLoadableOperator) {
  const auto r = run("scenario z-slice --m 3");
  ASSERT_EQ(r.code, 0);
  const auto t = std::get<QGraph>(load_operator(r.out));
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(serialize(t), r.out);
}

TEST(Cli, PolarFibre) {
  const auto r = run("polar --scenario z-slice --at 1/2");
  ASSERT_EQ(r.code, 0);
  const auto fib = hcone_from_json(json::parse(r.out), Q{});
  EXPECT_TRUE(cone_equal(fib, VCone<Q>::make(Q{}, 1, {{q(1)}})));
  EXPECT_EQ(run("polar --scenario z-slice --at 0.5").out, r.out);
}

TEST(Cli, CheckAndESet) {
  auto r = run("check --scenario step");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["quasimonotone"].get<bool>());
  r = run("e-set --scenario step");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["classification"], "singleton");
  EXPECT_EQ(j["point"][0], "0");
}

TEST(Cli, CertifyWithGridFile) {
  const auto grid = temp_file("half.json", R"({"dim": 1, "base_points": [["1/2"]], "probe_covectors": [[-1], [1]]})");
  const auto r = run("certify ae --scenario z-slice --grid " + grid.string());
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "ExactlyFalse");
  EXPECT_EQ(j["witness"][0]["x"][0], "1/2");
  EXPECT_EQ(j["witness"][0]["xstar"][0], "1");
  EXPECT_TRUE(j["replay"].get<bool>());
  EXPECT_EQ(json::parse(run("certify premaximal --scenario step").out)["verdict"], "ConsistentOnGrid");
}

TEST(Cli, MvipOnKGrid) {
  const auto r = run("mvip --scenario step --k-grid 1:2:0.25");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["minty"].size(), 5u);
  EXPECT_EQ(j["minty_polar"], json::parse(R"([["1"]])"));
  EXPECT_TRUE(j["polar_subset"].get<bool>());
  EXPECT_FALSE(j["equal"].get<bool>());
}

TEST(Cli, PlotWritesSvgAndCsv) {
  const auto svg = std::filesystem::path(testing::TempDir()) / "step.svg";
  const auto csv = std::filesystem::path(testing::TempDir()) / "step.csv";
  const auto r = run("plot --scenario step --region polar --cells 20 --out " + svg.string() + " --csv " + csv.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(svg));
  EXPECT_GT(std::filesystem::file_size(csv), 0u);
  EXPECT_EQ(json::parse(r.out)["cells"], 400);
}

TEST(Cli, ExitCodes) {
  const auto bad = temp_file("bad.json", "{\"dim\": 1, \"pairs\": [");
  EXPECT_EQ(run("check --operator " + bad.string()).code, 2);
  EXPECT_EQ(run("check --operator /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("polar --scenario z-slice --at 1,2").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);

  std::string five = R"({"dim": 5, "pairs": [{"x": [0,0,0,0,0], "xstar": [1,0,0,0,0]}]})";
  const auto big = temp_file("five.json", five);
  EXPECT_EQ(run("certify ae --operator " + big.string()).code, 3);

  const auto nqm = temp_file("nqm.json", R"({"dim": 1, "pairs": [{"x": [0], "xstar": [1]}, {"x": [1], "xstar": [-1]}]})");
  EXPECT_EQ(run("certify maximal --operator " + nqm.string()).code, 4);
}
