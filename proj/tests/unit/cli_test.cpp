#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "../support.hpp"

using namespace locale_lab::testing;

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(LOCALE_LAB_CLI) + " " + args + " 2>/dev/null";
  CliRun r{0, {}};
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return (data_dir() / (name + ".json")).string(); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "locale_lab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CheckReportsVerdicts) {
  CliRun r = run("check " + data("C3") + " --axioms F,H,anti_urysohn");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["frame"], "C3");
  EXPECT_EQ(j["axioms"]["F"]["value"], false);
  EXPECT_EQ(j["axioms"]["F"]["witness"], (std::vector<std::string>{"m", "0"}));
  EXPECT_EQ(j["axioms"]["anti_urysohn"]["value"], true);
  EXPECT_FALSE(j["axioms"].contains("T_U"));
}

TEST(Cli, CheckAllOnB4) {
  CliRun r = run("check " + data("B4"));
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["axioms"].size(), 20u);
  EXPECT_EQ(j["axioms"]["T_U"]["value"], true);
  EXPECT_EQ(j["axioms"]["T_U"]["bound"], 8);
}

TEST(Cli, InvalidFrameExitsTwo) {
  EXPECT_EQ(run("check " + data("N5")).status, 2);
  EXPECT_EQ(run("check " + data("no_top")).status, 2);
  EXPECT_EQ(run("check /nonexistent.json").status, 2);
  EXPECT_EQ(run("check " + data("C3") + " --axioms T2").status, 2);
}

TEST(Cli, UsageErrorExitsOne) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
}

TEST(Cli, TensorSummary) {
  CliRun r = run("tensor " + data("C3") + " " + data("C3"));
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 6);
  EXPECT_EQ(j["isomorphic_to_left"], false);
  CliRun u = run("tensor " + data("C4") + " " + data("two") + " --dump");
  auto k = nlohmann::json::parse(u.out);
  EXPECT_EQ(k["isomorphic_to_left"], true);
  EXPECT_EQ(k["elements"].size(), 4u);
}

TEST(Cli, TensorOverBoundIsSkipped) {
  CliRun r = run("tensor " + data("B8") + " " + data("B8") + " --tensor-bound 32");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["skipped"], "bound");
}

TEST(Cli, AuditViolationExitsThree) {
  auto path = scratch("bad_expectations.json");
  std::ofstream(path) << R"({"axioms": ["F", "irreducible"], "edges": [["irreducible", "F"]]})";
  CliRun r = run("audit --max-poset 3 --expected " + path.string());
  EXPECT_EQ(r.status, 3);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ok"], false);
}

TEST(Cli, AuditToFileIsRepeatable) {
  auto a = scratch("a.json"), b = scratch("b.json");
  ASSERT_EQ(run("audit --max-poset 4 --out " + a.string()).status, 0);
  ASSERT_EQ(run("audit --max-poset 4 --out " + b.string()).status, 0);
  std::ifstream fa(a), fb(b);
  std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
}

TEST(Cli, ExportFormats) {
  CliRun dot = run("export --dot --max-poset 3");
  ASSERT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  CliRun jsonl = run("export --jsonl --max-poset 3");
  ASSERT_EQ(jsonl.status, 0);
  std::size_t lines = std::count(jsonl.out.begin(), jsonl.out.end(), '\n');
  EXPECT_GT(lines, 3u);
  EXPECT_EQ(run("export --max-poset 3").status, 2);
}
