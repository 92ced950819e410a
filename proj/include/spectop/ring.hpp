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

#ifndef SPECTOP_RING_HPP_
#define SPECTOP_RING_HPP_

#include <string>
#include <vector>

#include "spectop/elemset.hpp"
#include "spectop/lattice.hpp"

namespace spectop {

inline constexpr int kDefaultRingCap = 512;

// A finite unital ring given by full addition/multiplication tables.
// Ring axioms are verified over all pairs/triples at construction.
struct FiniteRing {
  int n = 0;
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> add;  // row-major n*n
  std::vector<int> mul;
  std::vector<int> neg;  // additive inverses
  int zero = -1;
  int one = -1;
  bool commutative = false;

  int plus(int x, int y) const { return add[static_cast<std::size_t>(x) * n + y]; }
  int times(int x, int y) const { return mul[static_cast<std::size_t>(x) * n + y]; }
};

FiniteRing make_ring(std::string name, std::vector<std::string> labels,
                     std::vector<int> add, std::vector<int> mul,
                     int cap = kDefaultRingCap);

// The ring Z/n.
FiniteRing zmod_ring(int n, int cap = kDefaultRingCap);

// The full matrix ring M_n(F_q); only n = 2 and q in {2,3,4} are in scope.
FiniteRing matrix_ring(int q, int n = 2);

// Ideals of R as element bitsets, arranged into their inclusion lattice
// (meet = intersection, join = generated sum). `members` is aligned with the
// lattice element indices.
struct IdealLattice {
  FinLattice lat;
  std::vector<ElemSet> members;

  int index_of(const ElemSet& s) const;
};

IdealLattice ideal_lattice(const FiniteRing& r);       // two-sided ideals
IdealLattice left_ideal_lattice(const FiniteRing& r);  // left ideals

// Prime ideals of R among the two-sided ideals: proper P with
// AB <= P forcing A <= P or B <= P over all ideal pairs.
ElemSet prime_spectrum(const FiniteRing& r, const IdealLattice& ideals);

// Additive closure of {a*b : a in A, b in B}.
ElemSet ideal_product(const FiniteRing& r, const ElemSet& a, const ElemSet& b);

bool is_two_sided_ideal(const FiniteRing& r, const ElemSet& s);

}  // namespace spectop

#endif  // SPECTOP_RING_HPP_
