#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dcg/report.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

/// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + DCG_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string data(const std::string& file) { return std::string(DCG_DATA_DIR) + "/" + file; }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("analyze C2").status, 0);
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("analyze C2xq8").status, 1);
  EXPECT_EQ(run("analyze Q6").status, 1);
  EXPECT_EQ(run("graph C4 --kind nope").status, 1);
  EXPECT_EQ(run("graph C4 --kind relcom").status, 1);
  EXPECT_EQ(run("analyze table:/nonexistent.json").status, 1);
  EXPECT_EQ(run("--threads 0 analyze C2").status, 1);
  EXPECT_EQ(run("analyze S8").status, 2);
  EXPECT_EQ(run("--cohomology-cap 4 analyze D8").status, 2);
  EXPECT_EQ(run("--max-order 32 analyze sg64_182").status, 2);
  EXPECT_EQ(run("verify C13").status, 2);
}

TEST(Cli, ParseErrorNamesExpectedTokens) {
  const std::string cmd = std::string("\"") + DCG_CLI + "\" analyze C2xq8 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string err;
  char buf[512];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, n);
  pclose(pipe);
  EXPECT_NE(err.find("expected one of:"), std::string::npos);
  EXPECT_NE(err.find(" Q"), std::string::npos);
}

TEST(Cli, GraphEdgeListAndJson) {
  const auto v4 = run("graph C2xC2 --kind dcom --format edgelist");
  ASSERT_EQ(v4.status, 0);
  const auto ls = lines(v4.out);
  ASSERT_EQ(ls.size(), 3u);
  for (const auto& l : ls) EXPECT_EQ(l.substr(0, 2), "0 ");

  const auto c6 = run("graph C6 --kind epow --format json");
  ASSERT_EQ(c6.status, 0);
  const auto j = nlohmann::json::parse(c6.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["edges"].size(), 15u);
  EXPECT_EQ(j["kind"], "epow");
}

TEST(Cli, GoldenDot) {
  const auto r = run("graph C2xC4 --kind dcom --format dot");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(std::string(DCG_GOLDEN_DIR) + "/c2xc4_dcom.dot"));
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "dcg_cli_out.dot").string();
  ASSERT_EQ(run("graph S3 --out " + path).status, 0);
  EXPECT_EQ(slurp(path), run("graph S3").out);
  std::filesystem::remove(path);
}

TEST(Cli, RelativeCommutingGraphFromFixture) {
  const auto r = run("graph table:" + data("klein.json") + " --kind relcom --format edgelist --extension " +
                     data("d8_over_klein.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 3u);
  EXPECT_EQ(r.out, run("graph table:" + data("klein.json") + " --kind relcom --format edgelist --extension " +
                       data("q8_over_klein.json"))
                       .out);
  EXPECT_EQ(run("graph C2xC2 --kind relcom --extension " + data("d16_over_d8.json")).status, 1);
}

TEST(Cli, Multiplier) {
  const auto text = run("multiplier D8");
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("M = [2]"), std::string::npos);
  EXPECT_NE(text.out.find("B0 = []"), std::string::npos);
  const auto json = run("multiplier C3xC3 --json");
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["schur"], nlohmann::json::array({3}));

  const auto path = (std::filesystem::temp_directory_path() / "dcg_basis.json").string();
  ASSERT_EQ(run("multiplier C6 --dump-basis " + path).status, 0);
  const auto bases = nlohmann::json::parse(slurp(path));
  ASSERT_EQ(bases.size(), 2u);
  EXPECT_EQ(bases[0]["p"], 2);
  EXPECT_EQ(bases[1]["p"], 3);
  std::filesystem::remove(path);
}

TEST(Cli, AnalyzeJsonRoundTripsAndIsStable) {
  const auto a = run("analyze C2xC4 --json");
  ASSERT_EQ(a.status, 0);
  const auto report = dcg::report_from_json(nlohmann::json::parse(a.out));
  EXPECT_EQ(report.classification, "EPow ⊊ DCom ⊊ Com");
  EXPECT_EQ(dcg::to_json(report).dump(2) + "\n", a.out);
  EXPECT_EQ(run("analyze C2xC4 --json").out, a.out);
  EXPECT_EQ(run("--threads 3 analyze C2xC4 --json").out, a.out);
  const auto text = run("analyze D8");
  EXPECT_NE(text.out.find("kappa:           5/8"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto r = run("verify C2xC4");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls.back(), "OK");
  EXPECT_NE(r.out.find("oracle p=2 k=3"), std::string::npos);
  EXPECT_NE(r.out.find("EPow ⊊ DCom ⊊ Com"), std::string::npos);
}

TEST(Cli, Census) {
  const auto r = run("census C2 S3 D8 C2xC2xC2 --csv");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "name,order,kappa,schur,bogomolov,class");
  EXPECT_EQ(ls[3], "D8,8,5/8,[2],[],EPow = DCom ⊊ Com");
  const auto text = run("census C2 S3");
  EXPECT_EQ(lines(text.out).size(), 3u);
}
