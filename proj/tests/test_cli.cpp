#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "ciu/matrix.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CIU_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("fib and fib-word") {
  auto r = run("fib 7");
  CHECK(r.code == 0);
  CHECK(r.out == "13\n");
  CHECK(run("fib 1").out == "1\n");
  CHECK(run("fib 0").code == 2);
  CHECK(run("fib-word 5").out == "10110\n");
  CHECK(run("fib-word 1").out == "0\n");
  CHECK(run("fib-word 31").code == 3);
}

TEST_CASE("gen json is deterministic and round-trips") {
  auto a = run("gen 2 --format json");
  auto b = run("gen 2 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  ciu::GenericMatrix m = ciu::import_json(a.out);
  CHECK(m.size() == 5);
  CHECK(m.n == 2);

  auto zero = run("gen 0 --format json");
  ciu::GenericMatrix m0 = ciu::import_json(zero.out);
  CHECK(m0.values == std::vector<ciu::TruthValue>{{0}, {1}});
  CHECK(m0.designated == std::vector<std::size_t>{1});
}

TEST_CASE("gen table matches the published n = 2 tables") {
  auto r = run("gen 2 --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("~       | (0,1,0) (0,1,1) (1,0,1) (1,1,0) (1,1,1)") !=
        std::string::npos);
  CHECK(r.out.find("        | (1,0,1) (1,1,0) (0,1,0) (1,0,1) (1,1,0)") !=
        std::string::npos);
  CHECK(r.out.find("(1,0,1) | (0,1,0) (0,1,0) (1,0,1) (1,0,1) (1,0,1)") !=
        std::string::npos);
  CHECK(r.out.find("(0,1,1) | (1,0,1) (1,0,1) (1,0,1) (1,0,1) (1,0,1)") !=
        std::string::npos);
}

TEST_CASE("gen resource limit") {
  auto r = run("gen 40");
  CHECK(r.code == 3);
  CHECK(r.out.find("fib(43)") != std::string::npos);
  CHECK(r.out.find("433494437") != std::string::npos);
}

TEST_CASE("entails exit codes and countermodels") {
  auto fail = run("entails 1 \"p, ~p |- q\"");
  CHECK(fail.code == 1);
  CHECK(fail.out.find("p = (1,1)") != std::string::npos);
  CHECK(fail.out.find("q = (0,1)") != std::string::npos);

  CHECK(run("entails 0 \"p, ~p |- q\"").code == 0);

  auto both = run("entails 2 \"|- p -> p\" --oracle both");
  CHECK(both.code == 0);
  CHECK(both.out.find("oracles agree") != std::string::npos);

  CHECK(run("entails 2 \"p |- ~~p\" --oracle bival").code == 1);
  CHECK(run("entails 1 \"p, |- q\"").code == 2);
  CHECK(run("--max-evals 10 entails 4 \"p, q |- r\"").code == 3);
}

TEST_CASE("taut") {
  CHECK(run("taut 5 \"p -> p\"").code == 0);
  auto r = run("taut 1 \"p -> ~~p\"");
  CHECK(r.code == 1);
  CHECK(r.out.find("countermodel") != std::string::npos);
  // n = 0 values render bare
  auto z = run("taut 0 \"p\"");
  CHECK(z.code == 1);
  CHECK(z.out.find("p = 0") != std::string::npos);
}

TEST_CASE("report") {
  auto r = run("report 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("explosion") != std::string::npos);
  // |A_n| column: 2, 3, 5, 8
  CHECK(r.out.find("0   2") != std::string::npos);
  CHECK(r.out.find("3   8") != std::string::npos);
  auto r10 = run("report 10");
  CHECK(r10.code == 0);
  CHECK(r10.out.find("10  233") != std::string::npos);
}

TEST_CASE("iso") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp");
  std::string a = dir + "/ciu_m1.json";
  std::string b = dir + "/ciu_m1_perm.json";
  std::string c = dir + "/ciu_m0.json";
  CHECK(run("gen 1 --out " + a).code == 0);
  CHECK(run("gen 0 --out " + c).code == 0);

  // relabeled copy of M_1 by the cycle 0 -> 2 -> 1 -> 0
  ciu::GenericMatrix m1 = ciu::materialize(ciu::build_matrix(1));
  std::vector<std::size_t> perm = {2, 0, 1};
  ciu::GenericMatrix pm;
  pm.n = 1;
  pm.values.resize(3);
  pm.neg_table.resize(3);
  pm.imp_table.assign(3, std::vector<std::size_t>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    pm.values[perm[i]] = m1.values[i];
    pm.neg_table[perm[i]] = perm[m1.neg_table[i]];
    for (std::size_t j = 0; j < 3; ++j)
      pm.imp_table[perm[i]][perm[j]] = perm[m1.imp_table[i][j]];
  }
  for (std::size_t i : m1.designated) pm.designated.push_back(perm[i]);
  std::sort(pm.designated.begin(), pm.designated.end());
  std::ofstream(b) << ciu::export_json(pm) << "\n";

  auto found = run("iso " + a + " " + b);
  CHECK(found.code == 0);
  CHECK(found.out.find("isomorphic") != std::string::npos);
  CHECK(found.out.find("0 -> 2") != std::string::npos);

  CHECK(run("iso " + a + " " + c).code == 1);
  std::string bad = dir + "/ciu_bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run("iso " + a + " " + bad).code == 2);
  CHECK(run("iso " + a + " /nonexistent.json").code == 2);
}

TEST_CASE("equiv-check") {
  auto r = run("equiv-check 2 --atoms 2 --depth 4 --samples 25 --seed 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("oracles agree") != std::string::npos);
  CHECK(r.out == run("equiv-check 2 --atoms 2 --depth 4 --samples 25 --seed 5").out);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("gen").code == 2);
  CHECK(run("gen 2 --format yaml").code == 2);
}

TEST_CASE("CIU_MAX_EVALS environment mirror") {
  std::string cmd = "CIU_MAX_EVALS=10 " CIU_CLI_PATH " entails 4 \"p, q |- r\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (fread(buf, 1, sizeof(buf), pipe) > 0) {
  }
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 3);
}
