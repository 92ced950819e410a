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

#ifndef SPECTOP_LATTICE_HPP_
#define SPECTOP_LATTICE_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spectop/checks.hpp"
#include "spectop/elemset.hpp"
#include "spectop/errors.hpp"

namespace spectop {

// A finite bounded lattice with precomputed order and meet/join tables.
// Treated as immutable after construction; all member functions are const
// and safe to call concurrently. Data members stay public so that test
// fixtures (e.g. the suite's negative control) can build tampered copies.
struct FinLattice {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<ElemSet> up;    // up[a]   = {b : a <= b}
  std::vector<ElemSet> down;  // down[a] = {b : b <= a}
  std::vector<int> meet_tab;  // row-major n*n
  std::vector<int> join_tab;
  int bottom = -1;
  int top = -1;

  bool leq(int a, int b) const { return up[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  int meet(int a, int b) const { return meet_tab[static_cast<std::size_t>(a) * n + b]; }
  int join(int a, int b) const { return join_tab[static_cast<std::size_t>(a) * n + b]; }

  ElemSet all() const { return full_set(static_cast<std::size_t>(n)); }

  // -1 when the label is unknown.
  int index_of(const std::string& label) const;
  const std::string& label(int a) const { return labels[static_cast<std::size_t>(a)]; }
};

inline constexpr int kDefaultLatticeCap = 4096;

// Builds a FinLattice from declared elements and an arbitrary set of order
// pairs (first <= second). The relation is closed reflexively and
// transitively; cover relations and full relations are both fine.
// Throws NotAPoset on a cycle, NoBounds when no global bottom/top exists,
// NotALattice when some pair lacks a unique glb or lub, TooLarge past `cap`.
FinLattice build_lattice(const std::vector<std::string>& labels,
                         const std::vector<std::pair<int, int>>& leq_pairs,
                         int cap = kDefaultLatticeCap);

FinLattice build_lattice_labeled(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    int cap = kDefaultLatticeCap);

// Big meet/join. Empty meet is top, empty join is bottom.
int meet_all(const FinLattice& l, const ElemSet& s);
int join_all(const FinLattice& l, const ElemSet& s);

// Irreducibility of p inside the meet-subsemilattice `ground`:
// for a,b in ground with p <= a,b: a^b <= p implies a <= p or b <= p.
// `ground` must be meet-closed (GroundNotMeetClosed otherwise).
bool is_irreducible(const FinLattice& l, const ElemSet& ground, int p);

// Same implication quantified over all a,b in ground, no guard.
bool is_strongly_irreducible(const FinLattice& l, const ElemSet& ground, int p);

using LatticeOp = std::function<int(int, int)>;

// Distributivity of `ground` under the supplied operations, which must both
// keep ground closed (GroundNotClosed otherwise).
bool is_distributive(const FinLattice& l, const ElemSet& ground,
                     const LatticeOp& meet_fn, const LatticeOp& join_fn);

bool is_distributive(const FinLattice& l, const ElemSet& ground);

// True iff all pairs in s are comparable. Vacuously true on the empty set.
bool is_chain(const FinLattice& l, const ElemSet& s);

// Order dual: leq reversed, meet/join and bottom/top swapped.
FinLattice dual(const FinLattice& l);

ElemSet upset(const FinLattice& l, int x);
ElemSet downset(const FinLattice& l, int x);

// Re-verifies every lattice axiom from the stored tables: order axioms,
// bounds, commutativity/associativity/idempotence/absorption, and the
// universal properties of meet and join. The builder guarantees all of this;
// the check exists so corrupted fixtures are caught with a witness.
CheckList verify_lattice_axioms(const FinLattice& l);

}  // namespace spectop

#endif  // SPECTOP_LATTICE_HPP_
