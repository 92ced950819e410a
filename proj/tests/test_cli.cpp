//  Copyright 2026 The spectop Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string out_path = "cli_out.tmp";
  const std::string cmd =
      std::string(SPECTOP_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(status), buf.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

constexpr const char* kM3Json = R"({
  "elements": ["0", "a", "b", "c", "1"],
  "leq": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]
})";

constexpr const char* kChain3Json = R"({
  "elements": ["0", "x", "1"],
  "leq": [["0","x"],["x","1"]]
})";

}  // namespace

TEST_CASE("cli lattice analysis and exit codes") {
  write_file("m3.json", kM3Json);
  const RunResult ok = run("lattice m3.json --x a,b,c");
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.output);
  CHECK(j["flags"]["x_top"] == false);
  CHECK(j["witnesses"].contains("x_top"));

  CHECK(run("lattice m3.json --x a,b,1").exit_code == 4);  // top in X
  CHECK(run("lattice m3.json --x zz").exit_code == 4);
  CHECK(run("lattice m3.json").exit_code == 4);  // no X given

  write_file("bad.json", "{ not json");
  CHECK(run("lattice bad.json --x a").exit_code == 2);

  write_file("nolattice.json",
             R"({"elements": ["x", "y"], "leq": []})");
  CHECK(run("lattice nolattice.json --x x").exit_code == 3);
  std::remove("m3.json");
  std::remove("bad.json");
  std::remove("nolattice.json");
}

TEST_CASE("cli module analysis") {
  const RunResult r = run("module \"Z: 2,3,5\"");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["flags"]["topf"] == true);
  CHECK(j["flags"]["discrete"] == true);
  CHECK(j["details"]["spec_first"].size() == 3);

  CHECK(run("module \"Z: 1,2\"").exit_code == 2);
  CHECK(run("module \"Z: 700\"").exit_code == 5);
  CHECK(run("module nonsense").exit_code == 2);

  // Determinism: identical invocations produce identical bytes.
  const RunResult again = run("module \"Z: 2,3,5\"");
  CHECK(again.output == r.output);
}

TEST_CASE("cli ring analysis") {
  const RunResult r = run("ring M2F2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["flags"]["x_top"] == true);
  CHECK(j["flags"]["left_strongly_x_top"] == false);
}

TEST_CASE("cli export") {
  write_file("chain3.json", kChain3Json);
  const RunResult dot = run("export --format dot chain3.json");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("\"0\" -> \"x\"") != std::string::npos);
  CHECK(dot.output.find("\"x\" -> \"1\"") != std::string::npos);

  const RunResult topo = run("export --format dot \"Z: 2,3\"");
  CHECK(topo.exit_code == 0);
  CHECK(topo.output.find("->") == std::string::npos);  // two isolated points

  const RunResult as_json = run("export --format json \"Z: 2,3\"");
  CHECK(as_json.exit_code == 0);
  CHECK(nlohmann::json::parse(as_json.output)["points"].size() == 2);

  CHECK(run("export --format svg chain3.json").exit_code == 2);
  std::remove("chain3.json");
}

TEST_CASE("cli table mode") {
  const RunResult r = run("module \"Z: 4\" --table");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("strongly_topf: true") != std::string::npos);
}
