#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell pipeline with the CLI path substituted for every '%'.
RunResult run(const std::string& tmpl) {
  std::string cmd;
  for (char ch : tmpl) {
    if (ch == '%') {
      cmd += ORTHOPOSET_CLI_PATH;
    } else {
      cmd += ch;
    }
  }
  cmd += " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("check classifies fixtures and honors --require") {
  CHECK(run("% check fig3").exit_code == 0);
  CHECK(run("% check fig3 --require omp --require non-lattice").exit_code == 0);
  CHECK(run("% check fig7_o6 --require ortholattice --require non-gom").exit_code == 0);
  CHECK(run("% check fig6 --require omp").exit_code == 1);
  CHECK(run("% check fig1 --require orthogonal").exit_code == 1);

  RunResult r = run("% check fig3");
  CHECK(r.out.find("input: fig3 (18 elements)") != std::string::npos);
  CHECK(r.out.find("orthomodular poset: yes") != std::string::npos);
  CHECK(r.out.find("witness (a,b): join undefined") != std::string::npos);
}

TEST_CASE("documented pipelines") {
  CHECK(run("% gen fig2 | % check - --require omp --require non-lattice").exit_code == 0);
  CHECK(run("% hsum fig6 fig6 | % check - --require gom").exit_code == 0);
}

TEST_CASE("argument and input failures exit 2") {
  CHECK(run("% check fig99").exit_code == 2);
  CHECK(run("% check /no/such/file").exit_code == 2);
  CHECK(run("% table fig3 --relation weird").exit_code == 2);
  CHECK(run("% check fig3 --require sturdy").exit_code == 2);
  CHECK(run("printf 'orthoposet x\\nn 3\\nlabels 0 z 1\\nprime 2 1 0\\ncover 0 1\\ncover 1 2\\ncover 2 0\\n' | % check -").exit_code == 2);

  RunResult bad = run("printf 'orthoposet x\\nn 2\\nlabels 0 1\\nprime 0 1\\n' | % check -");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("infeasible enumerations exit 3") {
  CHECK(run("env -u ORTHOPOSET_FEASIBILITY_LIMIT % verify-min --exhaustive-to 16").exit_code == 3);
  CHECK(run("% enum --naive --max-size 9").exit_code == 3);
}

TEST_CASE("boolean and mo virtual fixtures resolve") {
  CHECK(run("% check boolean:3 --require boolean --require oml").exit_code == 0);
  CHECK(run("% check mo:4 --require ortholattice --require non-boolean").exit_code == 0);
  CHECK(run("% check boolean:x").exit_code == 2);
}

TEST_CASE("table output") {
  RunResult compat = run("% table boolean:1 --relation compat");
  CHECK(compat.exit_code == 0);
  CHECK(compat.out == "table compat boolean:1\n* 0 1\n0 | 1 1\n1 | 1 1\n");

  RunResult comm = run("% table fig7_o6 --relation commutator");
  CHECK(comm.exit_code == 0);
  CHECK(comm.out.find("* 0 a b b' a' 1") != std::string::npos);
  CHECK(comm.out.find("a | {1} {1} {1} {1} {1} {1}") != std::string::npos);

  RunResult slice = run("% table fig7_o6 --relation discriminator-slice --slice \"b'\"");
  CHECK(slice.exit_code == 0);
  CHECK(slice.out.find("slice b'") != std::string::npos);
  CHECK(slice.out.find("{b'}") != std::string::npos);
  CHECK(run("% table fig7_o6 --relation discriminator-slice --slice zz").exit_code == 2);
}

TEST_CASE("gen and dot round-trip through stdin") {
  RunResult direct = run("% dot fig7_o6");
  RunResult piped = run("% gen fig7_o6 | % dot -");
  CHECK(direct.exit_code == 0);
  CHECK(direct.out == piped.out);
  CHECK(direct.out.find("digraph") == 0);

  RunResult gen2 = run("% gen fig2 | % gen -");
  CHECK(gen2.out == run("% gen fig2").out);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* cmd :
       {"% check fig3", "% table fig3 --relation commutator",
        "% enum --max-size 6 --json", "% verify-unique18", "% gen fig1"}) {
    CAPTURE(cmd);
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("enum json payloads") {
  RunResult r = run("% enum --max-size 8 --json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "enum");
  CHECK(j["engine"] == "canonical");
  CHECK(j["counts"]["8"] == 80);
  CHECK(j["total"] == 124);
  CHECK(j["ok"] == true);

  RunResult nv = run("% enum --max-size 8 --naive --json");
  nlohmann::json njson = nlohmann::json::parse(nv.out);
  CHECK(njson["engine"] == "naive");
  CHECK(njson["counts"] == j["counts"]);

  RunResult omp = run("% enum --max-size 8 --filter omp --json");
  nlohmann::json oj = nlohmann::json::parse(omp.out);
  CHECK(oj["filters"] == nlohmann::json::array({"omp"}));
  CHECK(oj["counts"] == nlohmann::json({{"2", 1}, {"4", 1}, {"6", 1}, {"8", 2}}));
}

TEST_CASE("check json payload") {
  RunResult r = run("% check fig7_o6 --json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 6);
  CHECK(j["classification"]["ortholattice"] == true);
  CHECK(j["classification"]["orthomodular_poset"] == false);
  bool saw_lattice = false;
  for (const auto& rep : j["reports"]) {
    if (rep["property"] == "lattice") {
      saw_lattice = true;
      CHECK(rep["verdict"] == true);
    }
  }
  CHECK(saw_lattice);
}

TEST_CASE("verify commands emit certificates") {
  RunResult vm = run("% verify-min --exhaustive-to 8");
  CHECK(vm.exit_code == 0);
  CHECK(vm.out.find("no non-lattice orthomodular poset with at most 8 elements") !=
        std::string::npos);

  RunResult vu = run("% verify-unique18 --json");
  REQUIRE(vu.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(vu.out);
  CHECK(j["ok"] == true);
  CHECK(j["counts"]["18"] == 1);
}
