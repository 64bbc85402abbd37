#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(PTCONF_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, PoincareJson) {
  const CliResult r = run("poincare 3 5 --json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"unit\":\"q^{1/2}\",\"coeffs\":{\"-2\":\"1\",\"0\":\"5\",\"2\":\"1\"}}\n");
}

TEST(Cli, PoincareText) {
  const CliResult r = run("poincare 1 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, ZdRows) {
  const CliResult r = run("zd 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1\n1\n1,5,1\n1,7,29,64,29,7,1\n");
  EXPECT_EQ(run("zd 4 --form quadratic").out, r.out);
}

TEST(Cli, CurveCounts) {
  EXPECT_EQ(run("gw kontsevich 4").out, "1\n1\n12\n620\n");
  EXPECT_EQ(run("gw tangent 4").out, "1\n1\n7\n138\n");
  EXPECT_EQ(run("gw moving 3").out, "21\n");
  const CliResult f = run("gw floor 3");
  EXPECT_EQ(f.status, 0);
  EXPECT_NE(f.out.find("total 7"), std::string::npos);
}

TEST(Cli, EulerAndTrees) {
  EXPECT_EQ(run("euler mps 3").out, "138\n");
  EXPECT_EQ(run("euler closed 4").out, "5477\n");
  EXPECT_EQ(run("trees count --partition 1:2 --sources 5").out, "30\n");
}

TEST(Cli, Oracle) {
  const CliResult r = run("oracle ffcount 2 5 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "25\n");
}

TEST(Cli, VerifyAll) {
  const CliResult r = run("verify all");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_EQ(run("verify all --json").status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("poincare").status, 2);
  EXPECT_EQ(run("poincare 5 3").status, 2);
  EXPECT_EQ(run("oracle ffcount 2 4 2").status, 2);
  EXPECT_EQ(run("verify nosuch").status, 2);
  EXPECT_EQ(run("trees count --partition x --sources 5").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"poincare 4 7 --json", "zd 6", "gw floor 4", "verify trees --json"}) EXPECT_EQ(run(args).out, run(args).out) << args;
}
