// Copyright 2026 The hccrystal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests that drive the installed binary through a shell, the way
// a user would. The binary path arrives in the HCC_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

std::string CliPath() {
  const char* path = std::getenv("HCC_CLI");
  REQUIRE_MESSAGE(path != nullptr, "HCC_CLI must point at the binary");
  return path;
}

// Runs the binary with `args` appended; `prefix` may set environment
// variables shell-style ("VAR=value ").
RunResult Run(const std::string& args, const std::string& prefix = "") {
  const std::string cmd = prefix + "\"" + CliPath() + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return RunResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("crystal subcommand") {
  const RunResult text = Run("crystal --e 3 --charge=0,0 --max-rank 3");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("crystal graph") != std::string::npos);
  CHECK(text.output.find("vertices: 18") != std::string::npos);
  CHECK(text.output.find("-.1^3") != std::string::npos);

  const RunResult dot =
      Run("crystal --e 3 --charge=0,0 --max-rank 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.rfind("digraph", 0) == 0);

  const RunResult json_run =
      Run("crystal --e 3 --charge=0,0 --max-rank 3 --format json");
  CHECK(json_run.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(json_run.output);
  CHECK(j.at("vertices").size() == 18);
  CHECK(j.at("edges").size() == 16);

  const RunResult component = Run(
      "crystal --e 3 --charge=-1,0 --max-rank 3 --component \"-.-\" "
      "--format json");
  CHECK(component.exit_code == 0);
  const nlohmann::json cj = nlohmann::json::parse(component.output);
  CHECK(cj.at("max_rank") == 3);
  CHECK(cj.at("root") == "-.-");

  // Component roots of positive rank: --max-rank still caps absolute rank.
  const RunResult deep = Run(
      "crystal --e 3 --charge=0,0 --max-rank 1 --component \"-.1\" "
      "--format json");
  CHECK(deep.exit_code == 0);
  CHECK(nlohmann::json::parse(deep.output).at("vertices").size() == 1);
  const RunResult too_low =
      Run("crystal --e 3 --charge=0,0 --max-rank 0 --component \"-.1\"");
  CHECK(too_low.exit_code == 2);
}

TEST_CASE("output file option") {
  const std::string path = "cli_test_out.json";
  std::remove(path.c_str());
  const RunResult to_file = Run(
      "crystal --e 3 --charge=0,0 --max-rank 2 --format json --out " + path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  const RunResult direct =
      Run("crystal --e 3 --charge=0,0 --max-rank 2 --format json");
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());
}

TEST_CASE("hc subcommand") {
  const RunResult text = Run("hc --e 3 --n 7");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("series: 6") != std::string::npos);
  CHECK(text.output.find("1^7") != std::string::npos);
  CHECK(text.output.find("[new]") != std::string::npos);

  const RunResult json_run = Run("hc --n 7 --format json");
  CHECK(json_run.exit_code == 0);
  CHECK(nlohmann::json::parse(json_run.output).at("series").size() == 6);

  CHECK(Run("hc --e 4 --n 3").exit_code == 2);
}

TEST_CASE("inspect subcommands") {
  const RunResult symbol = Run("inspect symbol --bipartition 1.- --charge=0,0");
  CHECK(symbol.exit_code == 0);
  CHECK(symbol.output ==
        "( ... -2 -1  0 )\n"
        "( ... -2 -1  1 )\n");

  const RunResult abacus =
      Run("inspect abacus --bipartition -.- --charge=0,0 --e 3");
  CHECK(abacus.exit_code == 0);
  CHECK(abacus.output.find('\n') != std::string::npos);

  const RunResult phi = Run("inspect phi --t 1 --bipartition 1.-");
  CHECK(phi.exit_code == 0);
  CHECK(phi.output == "3\n");

  const RunResult ecore =
      Run("inspect ecore --partition 15,14,13,10^3,1 --e 2");
  CHECK(ecore.exit_code == 0);
  CHECK(ecore.output ==
        "2-core: 5,4,3,2,1\n"
        "2-weight: 29\n");

  const RunResult hw = Run("inspect hw --bipartition -.1 --charge=0,0 --e 3");
  CHECK(hw.exit_code == 0);
  CHECK(hw.output == "highest weight: yes (both criteria agree)\n");
  const RunResult not_hw =
      Run("inspect hw --bipartition 1.- --charge=0,0 --e 3");
  CHECK(not_hw.exit_code == 0);
  CHECK(not_hw.output == "highest weight: no (both criteria agree)\n");

  CHECK(Run("inspect phi --t 1 --bipartition oops").exit_code == 2);
  CHECK(Run("inspect").exit_code == 2);
}

TEST_CASE("verify subcommand") {
  const RunResult ok = Run("verify example7.2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.rfind("example7.2: pass", 0) == 0);

  const RunResult swept = Run("verify prop7.5 --e 3 --max-m 6");
  CHECK(swept.exit_code == 0);
  CHECK(swept.output.find("pass") != std::string::npos);

  const RunResult unknown = Run("verify not-a-check");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("error") != std::string::npos);
}

TEST_CASE("usage errors and budgets") {
  CHECK(Run("").exit_code == 2);
  CHECK(Run("frobnicate").exit_code == 2);
  CHECK(Run("crystal").exit_code == 2);  // --max-rank is required
  CHECK(Run("crystal --e 3 --charge=bogus --max-rank 2").exit_code == 2);
  CHECK(Run("crystal --e 3 --charge=0,0 --max-rank 2 --format yaml").exit_code ==
        2);
  CHECK(Run("--help").exit_code == 0);
  CHECK(Run("--help").output.find("crystal") != std::string::npos);

  const RunResult limited = Run("crystal --e 3 --charge=0,0 --max-rank 6",
                                "CRYSTAL_MAX_VERTICES=5 ");
  CHECK(limited.exit_code == 1);
  CHECK(limited.output.find("budget") != std::string::npos);

  const RunResult junk_env = Run("crystal --e 3 --charge=0,0 --max-rank 2",
                                 "CRYSTAL_MAX_VERTICES=banana ");
  CHECK(junk_env.exit_code == 2);

  const RunResult workers = Run(
      "crystal --e 3 --charge=0,0 --max-rank 5 --format json",
      "CRYSTAL_WORKERS=4 ");
  CHECK(workers.exit_code == 0);
  const RunResult serial =
      Run("crystal --e 3 --charge=0,0 --max-rank 5 --format json");
  CHECK(workers.output == serial.output);
}

}  // TEST_SUITE("cli")
