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

// Brute-force oracles kept independent of the implementation paths they
// check: they use only the raw order relation or the raw module tables,
// never the precomputed meet/join tables or the closure-based enumerators.

#ifndef SPECTOP_TESTS_ORACLES_HPP_
#define SPECTOP_TESTS_ORACLES_HPP_

#include <set>
#include <vector>

#include "spectop/lattice.hpp"
#include "spectop/module.hpp"
#include "spectop/spectrum.hpp"

namespace oracles {

// Greatest lower bound by direct scan over the order relation; -1 when no
// unique one exists.
inline int brute_glb(const spectop::FinLattice& l, int a, int b) {
  std::vector<int> lower;
  for (int c = 0; c < l.n; ++c)
    if (l.leq(c, a) && l.leq(c, b)) lower.push_back(c);
  for (int c : lower) {
    bool greatest = true;
    for (int d : lower)
      if (!l.leq(d, c)) greatest = false;
    if (greatest) return c;
  }
  return -1;
}

inline int brute_lub(const spectop::FinLattice& l, int a, int b) {
  std::vector<int> upper;
  for (int c = 0; c < l.n; ++c)
    if (l.leq(a, c) && l.leq(b, c)) upper.push_back(c);
  for (int c : upper) {
    bool least = true;
    for (int d : upper)
      if (!l.leq(c, d)) least = false;
    if (least) return c;
  }
  return -1;
}

// C(L) as the image of I over all 2^|X| subsets, folding meets with the
// brute glb. Only for small X.
inline std::set<int> brute_closed_elements(const spectop::SpectrumContext& ctx) {
  const auto pts = spectop::members_of(ctx.points);
  std::set<int> image;
  for (std::uint64_t mask = 0; mask < (1ull << pts.size()); ++mask) {
    int acc = ctx.lattice.top;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask & (1ull << i)) acc = brute_glb(ctx.lattice, acc, pts[i]);
    image.insert(acc);
  }
  return image;
}

// Every subset of the module that contains zero and is closed under
// addition and the scalar action. Only for |M| <= 16.
inline std::set<spectop::ElemSet> brute_submodules(const spectop::FiniteModule& m) {
  std::set<spectop::ElemSet> out;
  const int n = m.n;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!(mask & (1ull << m.zero))) continue;
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask & (1ull << x))) continue;
      for (int y = 0; y < n && closed; ++y) {
        if (!(mask & (1ull << y))) continue;
        if (!(mask & (1ull << m.plus(x, y)))) closed = false;
      }
      for (int r = 0; r < m.scalar_count() && closed; ++r)
        if (!(mask & (1ull << m.scale(r, x)))) closed = false;
    }
    if (!closed) continue;
    spectop::ElemSet s(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      if (mask & (1ull << x)) s.set(static_cast<std::size_t>(x));
    out.insert(s);
  }
  return out;
}

}  // namespace oracles

#endif  // SPECTOP_TESTS_ORACLES_HPP_
