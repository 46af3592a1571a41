#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "copnum/canonical.hpp"
#include "copnum/graph6.hpp"

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& exe, const std::string& args) {
  const std::string cmd = exe + " " + args + " 2>&1";
  Invocation r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Invocation cli(const std::string& args) { return run(COPSURVEY_BIN, args); }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "copnum_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, Solve) {
  const std::string pet = copnum::to_graph6(copnum::petersen());
  Invocation r = cli("solve --graph6 '" + pet + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cop_number = 3")) << r.out;
  EXPECT_TRUE(contains(r.out, "lower_bound = 3"));
  EXPECT_TRUE(contains(r.out, "prune = unknown"));

  r = cli("solve --graph6 A_");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cop_number = 1"));

  const fs::path c4 = scratch("c4.txt");
  std::ofstream(c4) << "4 4\n0 1\n1 2\n2 3\n3 0\n";
  r = cli("solve --edges " + c4.string() + " --trace");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cop_number = 2"));
  EXPECT_TRUE(contains(r.out, "captured"));

  r = cli("solve --graph6 '" + pet + "' --max-k 2");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "cop_number > 2"));

  r = cli("solve --graph6 '" + pet + "' --json --trace");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cop_number"], 3);
  EXPECT_EQ(j["transcript"].back()["step"], "capture");

  r = cli("solve --graph6 C_ --lemmas");  // disconnected
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(cli("solve --graph6 'A\x7f'").code, 1);
  EXPECT_EQ(cli("solve").code, 1);
  EXPECT_EQ(cli("solve --graph6 A_ --edges x").code, 1);
  EXPECT_EQ(cli("bogus").code, 1);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, Enumerate) {
  Invocation r = cli("enumerate --n 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "6 graphs generated"));
  const fs::path out = scratch("n4.g6");
  EXPECT_EQ(cli("enumerate --n 4 --out " + out.string()).code, 0);
  std::ifstream in(out);
  int lines = 0;
  for (std::string s; std::getline(in, s);) ++lines;
  EXPECT_EQ(lines, 6);

  r = cli("enumerate --n 1");
  EXPECT_EQ(r.out.substr(0, 2), "@\n");
  r = cli("enumerate --n 10 --min-degree 3 --max-degree 3");
  EXPECT_TRUE(contains(r.out, "19 graphs generated"));
  EXPECT_TRUE(contains(r.out, copnum::canonical_form(copnum::petersen()).bytes));
  EXPECT_EQ(cli("enumerate --n 5 --min-degree 3 --max-degree 2").code, 1);
  EXPECT_EQ(cli("enumerate --n 0").code, 1);
}

TEST(Cli, Survey) {
  const fs::path out = scratch("s.jsonl");
  const fs::path csv = scratch("s.csv");
  const fs::path ck = scratch("s.ck");
  fs::remove(ck);
  Invocation r = cli("survey --n 5 --mode full --jobs 2 --stable-output --out " + out.string() +
              " --summary " + csv.string() + " --checkpoint " + ck.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "classes = 21"));
  EXPECT_TRUE(contains(r.out, "cop_number >= 3: 0"));
  std::ifstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "n,mode,classes,c1,c2,c3plus,pruned,seconds");
  EXPECT_EQ(row.substr(0, 20), "5,full,21,16,5,0,0,0");

  r = cli("survey --n 7 --mode audit --sample 20 --seed 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "contradictions: 0"));

  EXPECT_EQ(cli("survey --n 5 --mode nope").code, 1);
  EXPECT_EQ(cli("survey --mode full").code, 1);
  EXPECT_EQ(cli("survey --n 5 --in /nonexistent/file.g6").code, 1);
  EXPECT_EQ(cli("survey --n 5 --out /nonexistent/dir/x.jsonl").code, 1);
}

TEST(Cli, SurveyAuditFailureExitsTwo) {
  // The mutant overstates two-cop graphs; its audit flags certified classes.
  const Invocation r = run(COPSURVEY_MUTANT_BIN, "survey --n 7 --mode audit --sample 853");
  EXPECT_EQ(r.code, 2) << r.out;
}

TEST(Cli, VerifyM3) {
  Invocation r = cli("verify-m3 --mode full --max-n 7 --jobs 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "verified"));
  const Invocation m = run(COPSURVEY_MUTANT_BIN, "verify-m3 --mode full --max-n 7");
  EXPECT_EQ(m.code, 2) << m.out;
  EXPECT_TRUE(contains(m.out, "offending graph6: " + copnum::to_graph6(copnum::canonical_graph(
                                                          copnum::cycle_graph(4)))));
}

TEST(Cli, JobsEnvironment) {
  const Invocation r = cli("survey --n 6 --mode full");
  ::setenv("COPNUM_JOBS", "2", 1);
  const Invocation e = cli("survey --n 6 --mode full --stable-output");
  ::unsetenv("COPNUM_JOBS");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "classes = 112"));
}
