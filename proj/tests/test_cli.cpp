#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(IDCODE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/idcode_test_" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

const std::string kChainTC3 = "n 3\n0 1\n0 2\n1 2\n";
const std::string kFourSets = R"({"ground_size":4,"sets":[[0],[0,2],[1,2],[0,2,3]]})";

}  // namespace

TEST_CASE("cli min-id and min-sep") {
  const std::string file = write_temp("chain.txt", kChainTC3);
  const CliResult id = run_cli("min-id " + file);
  CHECK(id.exit_code == 0);
  CHECK(id.output == "gamma_id = 3; code = {0,1,2}\n");

  const CliResult sep = run_cli("min-sep " + file);
  CHECK(sep.exit_code == 0);
  CHECK(sep.output == "gamma_s = 2; code = {1,2}\n");

  const CliResult json = run_cli("--json min-id " + file);
  CHECK(json.exit_code == 0);
  const auto j = nlohmann::json::parse(json.output);
  CHECK(j["gamma_id"] == 3);
  CHECK(j["code"] == nlohmann::json({0, 1, 2}));
}

TEST_CASE("cli rejects twins and bad input with exit 2") {
  const std::string twins = write_temp("twins.txt", "n 2\n0 1\n1 0\n");
  const CliResult r = run_cli("min-id " + twins);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("twins") != std::string::npos);

  const std::string loop = write_temp("loop.txt", "n 2\n0 0\n");
  const CliResult l = run_cli("min-sep " + loop);
  CHECK(l.exit_code == 2);
  CHECK(l.output.find("line 2") != std::string::npos);

  CHECK(run_cli("min-id /tmp/idcode_does_not_exist").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("cli check-code") {
  const std::string file = write_temp("chain.txt", kChainTC3);
  const CliResult r = run_cli("check-code " + file + " --code 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "dominating = false (vertex 0 undominated); separating = true; "
        "identifying = false\n");
}

TEST_CASE("cli check-family") {
  const std::string file = write_temp("chain.txt", kChainTC3);
  const CliResult r = run_cli("check-family " + file + " --emit-forest");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "in family\n1 0\n2 1\n");

  const std::string c3 = write_temp("c3.txt", "n 3\n0 1\n1 2\n2 0\n");
  CHECK(run_cli("check-family " + c3).output == "not in family\n");
}

TEST_CASE("cli bondy and extremal report paper-style element labels") {
  const std::string file = write_temp("four.json", kFourSets);
  const CliResult check = run_cli("extremal check " + file);
  CHECK(check.exit_code == 0);
  CHECK(check.output == "not extremal; witness element 2\n");

  const CliResult json = run_cli("--json extremal check " + file);
  const auto j = nlohmann::json::parse(json.output);
  CHECK(j["extremal"] == false);
  CHECK(j["witness_element"] == 1);  // zero-indexed in JSON

  const CliResult element = run_cli("bondy element " + file);
  CHECK(element.output == "element = 1\n");
  const auto je = nlohmann::json::parse(run_cli("--json bondy element " + file).output);
  CHECK(je["element"] == 0);

  const std::string two = write_temp("two.json", R"({"ground_size":3,"sets":[[0],[0,1]]})");
  CHECK(run_cli("bondy reduce " + two).output == "removed = {1,3}\n");
  CHECK(run_cli("bondy reduce-nonempty " + two).output == "removed = {3}\n");
}

TEST_CASE("cli extremal witness") {
  const std::string chain =
      write_temp("chain.json", R"({"ground_size":3,"sets":[[0],[0,1],[0,1,2]]})");
  const CliResult r = run_cli("--json extremal witness " + chain);
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["extremal"] == true);
  CHECK(j["digraph"] == "n 3\n0 1\n0 2\n1 2\n");
  CHECK(j["matching"] == nlohmann::json({0, 1, 2}));
}

TEST_CASE("cli convert round trip") {
  const std::string file = write_temp("chain.txt", kChainTC3);
  const CliResult d2b = run_cli("convert d2b " + file);
  CHECK(d2b.exit_code == 0);
  const std::string bip = write_temp("chain_bip.json", d2b.output);
  const CliResult b2d = run_cli("convert b2d " + bip);
  CHECK(b2d.exit_code == 0);
  CHECK(b2d.output == kChainTC3);

  const std::string sys = write_temp("four.json", kFourSets);
  const CliResult sys2b = run_cli("convert sys2b " + sys);
  CHECK(sys2b.exit_code == 0);
  const auto j = nlohmann::json::parse(sys2b.output);
  CHECK(j["s_size"] == 4);
  CHECK(j["edges"].size() == 8);
}

TEST_CASE("cli verify exit codes") {
  CHECK(run_cli("verify bondy --max-n 3").exit_code == 0);
  CHECK(run_cli("verify unknown-thm").exit_code == 2);
  CHECK(run_cli("verify gamma-bounds --max-n 9").exit_code == 2);

  const CliResult json = run_cli("--json verify gamma-bounds --max-n 2 --workers 2");
  CHECK(json.exit_code == 0);
  const auto j = nlohmann::json::parse(json.output);
  CHECK(j["passed"] == true);
  CHECK(j["params"]["workers"] == 2);
}

TEST_CASE("cli worker default comes from the environment") {
  CliResult r;
  {
    const std::string command = std::string("IDCODE_WORKERS=3 ") + IDCODE_CLI_PATH +
                                " --json verify gamma-bounds --max-n 2 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
      r.output.append(buffer, got);
    r.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["params"]["workers"] == 3);
}
