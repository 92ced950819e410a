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

#ifndef SPECTOP_CHECKS_HPP_
#define SPECTOP_CHECKS_HPP_

#include <cstdint>
#include <deque>
#include <string>

namespace spectop {

// One verified law: how many instances were exercised and, on failure,
// the first witness found (in deterministic scan order).
struct Check {
  std::string name;
  std::int64_t cases = 0;
  bool pass = true;
  std::string witness;
};

struct CheckList {
  // deque keeps references from add() valid while later checks are added
  std::deque<Check> checks;

  Check& add(const std::string& name) {
    checks.push_back(Check{name, 0, true, ""});
    return checks.back();
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::int64_t total_cases() const {
    std::int64_t total = 0;
    for (const auto& c : checks) total += c.cases;
    return total;
  }

  void merge(const CheckList& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace spectop

#endif  // SPECTOP_CHECKS_HPP_
