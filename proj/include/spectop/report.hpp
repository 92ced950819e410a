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

#ifndef SPECTOP_REPORT_HPP_
#define SPECTOP_REPORT_HPP_

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "spectop/module.hpp"
#include "spectop/spectrum.hpp"

namespace spectop {

// The classification record a CLI run emits. Flags that are undecidable for
// the input (e.g. separation axioms of a space that does not exist because
// the module is not topf) stay unset and serialize as null. Every false flag
// carries a machine-checkable witness under the same key.
struct AnalysisReport {
  std::string kind;   // "lattice" | "module" | "ring"
  std::string input;
  std::map<std::string, std::optional<bool>> flags;
  nlohmann::json witnesses = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::object();

  void set_flag(const std::string& name, bool value) { flags[name] = value; }
  void set_flag(const std::string& name, bool value, nlohmann::json witness) {
    flags[name] = value;
    if (!value) witnesses[name] = std::move(witness);
  }
  void unset_flag(const std::string& name) { flags[name] = std::nullopt; }
};

nlohmann::json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string report_to_table(const AnalysisReport& r);

// Section-2 analysis of a context: Galois laws, C(L), the three X-top
// criteria, strong X-top-ness, and the full space battery when X-top.
AnalysisReport analyze_lattice_context(const SpectrumContext& ctx,
                                       const SampleSpec& sample = {});

// Section-3/4 analysis of a module spec.
AnalysisReport analyze_module(const std::string& spec, const Caps& caps = {});

// Zariski analysis of a ring spec ("Zmod:12", "M2F2", ...): the two-sided
// ideal lattice with X = Spec(R), plus the left-ideal lattice with the same X.
AnalysisReport analyze_ring(const std::string& spec, const Caps& caps = {});

// Topological battery shared by the analyses; flag names t0, t1, t2,
// discrete, connected, irreducible, ultraconnected, sober, compact.
void analyze_space(const TopSpace& t, const std::string& prefix,
                   AnalysisReport& into);

}  // namespace spectop

#endif  // SPECTOP_REPORT_HPP_
