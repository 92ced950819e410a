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

#ifndef SPECTOP_ELEMSET_HPP_
#define SPECTOP_ELEMSET_HPP_

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace spectop {

// Bit-set over element indices of some finite carrier (lattice elements,
// module elements, topology points). Size always equals the carrier size.
using ElemSet = boost::dynamic_bitset<>;

inline ElemSet make_set(std::size_t n, std::initializer_list<std::size_t> bits) {
  ElemSet s(n);
  for (auto b : bits) s.set(b);
  return s;
}

inline ElemSet full_set(std::size_t n) {
  ElemSet s(n);
  s.set();
  return s;
}

inline std::vector<int> members_of(const ElemSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

template <typename Fn>
void for_each_member(const ElemSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    fn(static_cast<int>(i));
}

// Controls subset-quantified checks: full enumeration up to `cap` members,
// a fixed deterministic sample beyond it.
struct SampleSpec {
  int cap = 15;
  std::uint64_t seed = 0;
  int samples = 1000;
};

// Non-empty subsets of `universe`, either exhaustively (|universe| <= cap)
// or the documented deterministic sample: singletons, pairs, the whole set,
// and `samples` pseudo-random subsets from the fixed seed.
std::vector<ElemSet> subsets_of(const ElemSet& universe, const SampleSpec& spec);

}  // namespace spectop

#endif  // SPECTOP_ELEMSET_HPP_
