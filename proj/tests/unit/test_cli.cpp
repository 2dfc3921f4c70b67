#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(DIVKNOT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("divknot_cli_" + name);
}

}  // namespace

TEST(Cli, KnotJson) {
  const CliResult r = run("knot --type III --eps 1 --delta 1 -A 2 -k 2 -t 1 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"coef\":-219"), std::string::npos);
  EXPECT_NE(r.out.find("\"region\":[11,13,16,17]"), std::string::npos);
}

TEST(Cli, KnotTable) {
  const CliResult r = run("knot --type III --eps 1 -A 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("cp_braid: W(5)^3 W(3)"), std::string::npos);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run("knot --type IV --eps 1 -A 4").status, 2);
  EXPECT_EQ(run("knot --type IX --eps 1 -A 4").status, 2);
  EXPECT_EQ(run("knot --eps 1 -A 4").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("trace --region 3,5,3").status, 2);
  EXPECT_EQ(run("alex --braid \"W(3\"").status, 2);
  EXPECT_EQ(run("ttk -p 4 -q 2 -r 3 -s 1").status, 2);
  EXPECT_EQ(run("verify --suite nope").status, 2);
  EXPECT_EQ(run("sweep --grid \"A=1..x\"").status, 2);
}

TEST(Cli, Trace) {
  const auto svg = temp_file("p237.svg");
  const CliResult r = run("trace --region 3,5,3,4 --format json --svg " + svg.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"double_points\":5"), std::string::npos);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
  std::filesystem::remove(svg);
}

TEST(Cli, Braid) {
  const CliResult r = run("braid --region 3,5,3,4 --raw-claim1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "W(5)^3 W(3)\ns2 s4 s1 s3 s2 s4 s1 s3 s2 s4 s1 s3 s2 s1\n");
}

TEST(Cli, Alex) {
  const CliResult r = run("alex --braid \"W(5)^3 W(3)\" --seifert");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("alexander: t^10 - t^9 + t^7 - t^6 + t^5 - t^4 + t^3 - t + 1"), std::string::npos);
  EXPECT_NE(r.out.find("genus: 5"), std::string::npos);
}

TEST(Cli, Ttk) {
  const CliResult r = run("ttk -p 4 -q 3 -r 5 -s 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("region: [6,8;4,5]"), std::string::npos);
  EXPECT_NE(r.out.find("region presents knot: yes"), std::string::npos);
  const CliResult a = run("ttk --audit --max-A 3 --max-k 1");
  EXPECT_EQ(a.status, 0);
  EXPECT_NE(a.out.find("\"verdict\":\"mismatch\""), std::string::npos);
}

TEST(Cli, Relations) {
  const CliResult r = run("relations --max-A 10");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(Cli, SweepAndRecheck) {
  const auto path = temp_file("atlas.jsonl");
  const CliResult s = run("sweep --grid \"A=2..4,k=0..1,t=-1..1\" --types III --out " + path.string());
  EXPECT_EQ(s.status, 0);
  const CliResult r = run("recheck --in " + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("36 rows, 36 identical"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyWritesReport) {
  const auto path = temp_file("report.json");
  const CliResult r = run("verify --suite ttk-audit --suite relations --report " + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("ttk"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}
