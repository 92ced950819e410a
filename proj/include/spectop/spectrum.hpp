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

#ifndef SPECTOP_SPECTRUM_HPP_
#define SPECTOP_SPECTRUM_HPP_

#include <string>
#include <vector>

#include "spectop/checks.hpp"
#include "spectop/elemset.hpp"
#include "spectop/lattice.hpp"
#include "spectop/topology.hpp"

namespace spectop {

// Subsets of the designated point set X, carried as lattice-element bitsets.
using PointSet = ElemSet;

// A lattice together with a designated point set X (never containing top),
// the carrier of the Galois connection between L and P(X).
struct SpectrumContext {
  FinLattice lattice;
  ElemSet points;         // X, as lattice element indices
  bool from_dual = false; // true when the lattice is a dualized submodule lattice

  std::vector<std::string> point_labels() const;
};

// Validates X: non-empty, inside the lattice, top excluded.
SpectrumContext make_context(FinLattice lattice, ElemSet x, bool from_dual = false);

// V(a) = {p in X : a <= p}.
PointSet variety(const SpectrumContext& ctx, int a);

// I(A) = big meet of A; I(empty) = top.
int intersect_point_set(const SpectrumContext& ctx, const PointSet& a);

// Im(V), sorted and deduplicated.
std::vector<PointSet> variety_image(const SpectrumContext& ctx);

// Adjunction inequalities, the two triple-composition laws, and
// order-reversal of V and I, each as its own check.
CheckList check_galois_laws(const SpectrumContext& ctx,
                            const SampleSpec& sample = {});

// The closed elements C(L) = {a : a = I(V(a))} with the modified join.
struct ClosedElements {
  ElemSet members;
  std::vector<int> elems;      // ascending member indices
  std::vector<int> tilde_tab;  // pairwise modified join, indexed over elems

  int position_of(int element) const;
  int tilde(int pos_a, int pos_b) const {
    return tilde_tab[static_cast<std::size_t>(pos_a) * elems.size() +
                     static_cast<std::size_t>(pos_b)];
  }
};

// Fixpoint scan over L (cost O(|L| * |X|)), not 2^|X| enumeration.
// The pairwise modified-join table is skipped when with_tilde is false.
ClosedElements closed_elements(const SpectrumContext& ctx, bool with_tilde = true);

// Modified join of a subset of C(L). Evaluates both defining formulas,
// I(V(join Y)) and the meet of the common upper bounds inside C(L), and
// insists they agree. NotClosedElements when Y leaves C(L).
int tilde_join(const SpectrumContext& ctx, const ElemSet& y);

struct XTopResult {
  bool value = true;
  int witness_a = -1;  // pair whose union of varieties leaves Im(V)
  int witness_b = -1;
};

// Direct criterion: Im(V) closed under pairwise unions.
XTopResult is_x_top(const SpectrumContext& ctx);

// Every p in X strongly irreducible in (C(L), meet).
bool is_x_top_via_c(const SpectrumContext& ctx);

// (C(L), meet, modified join) distributive and every p in X irreducible there.
bool is_x_top_via_d(const SpectrumContext& ctx);

struct StronglyXTopResult {
  bool value = true;
  int witness_p = -1;
  int witness_a = -1;
  int witness_b = -1;
};

// Every p in X strongly irreducible in L, cross-checked against the
// anti-homomorphism laws V(a^b) = V(a) u V(b) and V(avb) = V(a) n V(b).
// The two routes must agree (OracleDisagreement otherwise).
StronglyXTopResult is_strongly_x_top(const SpectrumContext& ctx);

// The topology with closed sets Im(V). NotXTop when the context is not X-top.
TopSpace build_topology(const SpectrumContext& ctx);

// Bourbaki irreducibility of A inside the variety topology.
// EmptySet / NotXTop on violated preconditions.
bool is_irreducible_point_set(const SpectrumContext& ctx, const PointSet& a);

// Exercises the irreducibility correspondence over subsets of X:
// I(A) irreducible in C(L) forces A irreducible; under strong X-top-ness the
// conditions are equivalent; intervals [x,1[ inside X are chains; and
// I(A) in X forces A irreducible.
CheckList check_irreducible_correspondence(const SpectrumContext& ctx,
                                           const SampleSpec& sample = {});

}  // namespace spectop

#endif  // SPECTOP_SPECTRUM_HPP_
