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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectop/errors.hpp"
#include "spectop/json_io.hpp"
#include "spectop/report.hpp"
#include "spectop/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotALattice = 3;
constexpr int kExitBadX = 4;
constexpr int kExitTooLarge = 5;

int exit_code_for(const spectop::Error& e) {
  switch (e.code()) {
    case spectop::Errc::NotAPoset:
    case spectop::Errc::NotALattice:
    case spectop::Errc::NoBounds:
      return kExitNotALattice;
    case spectop::Errc::BadX:
      return kExitBadX;
    case spectop::Errc::TooLarge:
      return kExitTooLarge;
    default:
      return kExitParse;
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) spectop::fail(spectop::Errc::BadInput, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    spectop::fail(spectop::Errc::BadInput, std::string("JSON parse error: ") + e.what());
  }
  return j;
}

void emit(const spectop::AnalysisReport& report, bool table) {
  if (table)
    std::cout << spectop::report_to_table(report);
  else
    std::cout << spectop::report_to_json(report).dump(2) << "\n";
}

spectop::SpectrumContext context_from_cli(const std::string& path,
                                          const std::string& x_csv) {
  const nlohmann::json j = load_json_file(path);
  if (j.contains("lattice")) return spectop::context_from_json(j);
  spectop::FinLattice l = spectop::lattice_from_json(j);
  if (x_csv.empty())
    spectop::fail(spectop::Errc::BadX, "no X given; pass --x a,b,c");
  spectop::ElemSet x(static_cast<std::size_t>(l.n));
  std::stringstream ss(x_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int idx = l.index_of(item);
    if (idx < 0) spectop::fail(spectop::Errc::BadX, "unknown X label '" + item + "'");
    x.set(static_cast<std::size_t>(idx));
  }
  return spectop::make_context(std::move(l), std::move(x));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectop: finite topological lattices and first-submodule spectra"};
  app.require_subcommand(1);

  std::string lattice_file, x_csv, module_spec, ring_spec;
  std::string export_format = "dot", export_input;
  bool table = false;
  std::uint64_t seed = 0;
  int cap = 15;
  int max_order = spectop::kDefaultModuleCap;
  int random_count = 200;
  bool negative_control = false;

  auto* lattice_cmd = app.add_subcommand("lattice", "analyze a lattice JSON file");
  lattice_cmd->add_option("file", lattice_file)->required();
  lattice_cmd->add_option("--x", x_csv, "comma-separated point labels");
  lattice_cmd->add_flag("--table", table);
  lattice_cmd->add_option("--cap", cap);
  lattice_cmd->add_option("--seed", seed);

  auto* module_cmd = app.add_subcommand("module", "analyze a module spec");
  module_cmd->add_option("spec", module_spec)->required();
  module_cmd->add_flag("--table", table);
  module_cmd->add_option("--cap", cap);
  module_cmd->add_option("--seed", seed);
  module_cmd->add_option("--max-order", max_order);

  auto* ring_cmd = app.add_subcommand("ring", "analyze a ring spec");
  ring_cmd->add_option("spec", ring_spec)->required();
  ring_cmd->add_flag("--table", table);

  auto* suite_cmd = app.add_subcommand("suite", "run the theorem-verification suite");
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--cap", cap);
  suite_cmd->add_option("--random", random_count);
  suite_cmd->add_flag("--table", table);
  suite_cmd->add_flag("--negative-control", negative_control,
                      "inject the corrupted meet-table fixture");

  auto* export_cmd = app.add_subcommand("export", "export DOT or JSON");
  export_cmd->add_option("--format", export_format, "dot or json");
  export_cmd->add_option("input", export_input,
                         "lattice JSON file or module spec")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*lattice_cmd) {
      spectop::SampleSpec sample{cap, seed, 1000};
      auto ctx = context_from_cli(lattice_file, x_csv);
      auto report = spectop::analyze_lattice_context(ctx, sample);
      report.input = lattice_file;
      emit(report, table);
      return kExitOk;
    }
    if (*module_cmd) {
      spectop::Caps caps;
      caps.max_order = max_order;
      caps.sample = spectop::SampleSpec{cap, seed, 1000};
      emit(spectop::analyze_module(module_spec, caps), table);
      return kExitOk;
    }
    if (*ring_cmd) {
      emit(spectop::analyze_ring(ring_spec, spectop::Caps{}), table);
      return kExitOk;
    }
    if (*suite_cmd) {
      spectop::SuiteOptions options;
      options.seed = seed;
      options.cap = cap;
      options.random_count = random_count;
      options.negative_control = negative_control;
      const spectop::SuiteResult result = spectop::run_suite(options);
      if (table)
        std::cout << spectop::suite_to_table(result);
      else
        std::cout << spectop::suite_to_json(result, options).dump(2) << "\n";
      return result.all_pass() ? kExitOk : kExitSuiteFailure;
    }
    if (*export_cmd) {
      if (export_format != "dot" && export_format != "json")
        spectop::fail(spectop::Errc::BadInput,
                      "unknown export format '" + export_format + "'");
      const bool is_module_spec = export_input.rfind("Z:", 0) == 0 ||
                                  export_input.rfind("ring ", 0) == 0;
      if (is_module_spec) {
        const auto m = spectop::parse_module_spec(export_input, spectop::Caps{});
        const auto subs = spectop::enumerate_submodules(m, spectop::Caps{});
        const auto topf = spectop::is_topf_module(m, subs);
        const spectop::TopSpace space =
            topf.value && !topf.firstless
                ? spectop::build_topology(spectop::spec_f_context(m, subs))
                : spectop::torsion_subspace_topology(m, subs);
        if (export_format == "dot")
          std::cout << spectop::specialization_dot(space);
        else
          std::cout << spectop::topspace_to_json(space).dump(2) << "\n";
      } else {
        const auto l = spectop::lattice_from_json(load_json_file(export_input));
        if (export_format == "dot")
          std::cout << spectop::hasse_dot(l);
        else
          std::cout << spectop::lattice_to_json(l).dump(2) << "\n";
      }
      return kExitOk;
    }
  } catch (const spectop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
