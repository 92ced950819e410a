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

#ifndef SPECTOP_SUITE_HPP_
#define SPECTOP_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectop/module.hpp"
#include "spectop/spectrum.hpp"

namespace spectop {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int cap = 15;
  int random_count = 200;
  int random_max_size = 8;
  bool negative_control = false;  // inject the corrupted meet-table fixture
};

struct SuiteGroup {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> witnesses;  // first few failures

  void record(bool ok, const std::string& witness) {
    ++cases;
    if (!ok) {
      ++failures;
      if (witnesses.size() < 5) witnesses.push_back(witness);
    }
  }
};

struct SuiteResult {
  std::vector<SuiteGroup> groups;

  std::int64_t total_cases() const;
  std::int64_t total_failures() const;
  bool all_pass() const { return total_failures() == 0; }
};

// Every transitively-closed sub-relation of the ascending order on
// {0..n-1} that forms a bounded lattice, for all n <= max_n. Every lattice
// isomorphism class of that size appears at least once.
std::vector<FinLattice> all_lattices_up_to(int max_n);

// Seeded random bounded lattices with between 4 and max_n elements.
std::vector<FinLattice> random_lattices(int count, int max_n, std::uint64_t seed);

struct CorpusModule {
  std::string name;
  std::string spec;
};

// The named module corpus anchoring the worked examples.
std::vector<CorpusModule> module_corpus();

// Runs every theorem group over the built-in corpus.
SuiteResult run_suite(const SuiteOptions& options);

nlohmann::json suite_to_json(const SuiteResult& result, const SuiteOptions& options);
std::string suite_to_table(const SuiteResult& result);

}  // namespace spectop

#endif  // SPECTOP_SUITE_HPP_
