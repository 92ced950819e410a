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

#ifndef SPECTOP_TESTS_FIXTURES_HPP_
#define SPECTOP_TESTS_FIXTURES_HPP_

#include "spectop/lattice.hpp"
#include "spectop/spectrum.hpp"
#include "spectop/topology.hpp"

namespace fixtures {

// Diamond: 0 < a,b,c < 1 with a,b,c pairwise incomparable.
inline spectop::FinLattice m3() {
  return spectop::build_lattice_labeled(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

// The four-element Boolean lattice 0 < x,y < 1.
inline spectop::FinLattice bool4() {
  return spectop::build_lattice_labeled(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

inline spectop::FinLattice chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    pairs.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return spectop::build_lattice_labeled(labels, pairs);
}

// Pentagon N5: 0 < a < b < 1 and 0 < c < 1 with c incomparable to a,b.
inline spectop::FinLattice n5() {
  return spectop::build_lattice_labeled(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// The divisor lattice of 12 with elements the ideals (g) of Z/12, ordered by
// inclusion: (a) <= (b) iff b divides a.
inline spectop::FinLattice z12_divisor_lattice() {
  const std::vector<int> divs = {1, 2, 3, 4, 6, 12};
  std::vector<std::string> labels;
  for (int d : divs) labels.push_back("(" + std::to_string(d) + ")");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a : divs)
    for (int b : divs)
      if (a % b == 0)
        pairs.emplace_back("(" + std::to_string(a) + ")",
                           "(" + std::to_string(b) + ")");
  return spectop::build_lattice_labeled(labels, pairs);
}

inline spectop::SpectrumContext m3_points_abc() {
  spectop::FinLattice l = m3();
  return spectop::make_context(l, spectop::make_set(5, {1, 2, 3}));
}

inline spectop::TopSpace sierpinski() {
  using spectop::ElemSet;
  return spectop::make_space(
      {"a", "b"},
      {ElemSet(2), spectop::make_set(2, {0}), spectop::full_set(2)});
}

inline spectop::TopSpace discrete(int n) {
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  std::vector<spectop::ElemSet> closed;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    spectop::ElemSet s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) s.set(static_cast<std::size_t>(i));
    closed.push_back(s);
  }
  return spectop::make_space(points, closed);
}

inline spectop::TopSpace indiscrete(int n) {
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  return spectop::make_space(
      points, {spectop::ElemSet(static_cast<std::size_t>(n)),
               spectop::full_set(static_cast<std::size_t>(n))});
}

}  // namespace fixtures

#endif  // SPECTOP_TESTS_FIXTURES_HPP_
