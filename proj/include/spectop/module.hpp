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

#ifndef SPECTOP_MODULE_HPP_
#define SPECTOP_MODULE_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectop/checks.hpp"
#include "spectop/elemset.hpp"
#include "spectop/lattice.hpp"
#include "spectop/ring.hpp"
#include "spectop/spectrum.hpp"
#include "spectop/topology.hpp"

namespace spectop {

inline constexpr int kDefaultModuleCap = 512;

struct Caps {
  int max_order = kDefaultModuleCap;
  int max_submodules = 100000;
  SampleSpec sample;
};

// Scalars acting through Z/e for e the module exponent. Ideals of Z are
// carried by a positive generator dividing e (generator 1 stands for Z).
struct ZCoefficients {
  int exponent = 1;
};

// A finite left module with fully tabulated addition and scalar action.
// Immutable after construction.
struct FiniteModule {
  std::variant<ZCoefficients, FiniteRing> coeff;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<int> add;  // row-major n*n
  std::vector<int> act;  // act[scalar * n + x]
  int zero = 0;
  std::string spec;

  bool over_z() const { return std::holds_alternative<ZCoefficients>(coeff); }
  int exponent() const { return std::get<ZCoefficients>(coeff).exponent; }
  const FiniteRing& ring() const { return std::get<FiniteRing>(coeff); }
  int scalar_count() const {
    return over_z() ? exponent() : ring().n;
  }
  int plus(int x, int y) const { return add[static_cast<std::size_t>(x) * n + y]; }
  int scale(int r, int x) const { return act[static_cast<std::size_t>(r) * n + x]; }
};

// Mini-language: "Z: d1,d2,..." for the Z-module sum of Z/di (all di >= 2);
// "ring M2F2: regular" / "ring M2F2: column"; "ring Zmod:12: regular".
// BadSpec / TooLarge on violations.
FiniteModule parse_module_spec(const std::string& spec, const Caps& caps = {});

FiniteModule z_module(const std::vector<int>& summands, const Caps& caps = {});
FiniteModule regular_module(const FiniteRing& r);
FiniteModule column_module(int q);  // F_q^2 over the matrix ring M_2(F_q)

// Submodule closure of a subset.
ElemSet span(const FiniteModule& m, ElemSet seed);

bool is_submodule(const FiniteModule& m, const ElemSet& s);

// ann_R(N): positive generator of the Z-ideal in the Z case, an element
// bitset (verified two-sided) in the ring case. ann(0) is the whole ring.
struct AnnIdeal {
  bool over_z = true;
  long generator = 1;  // Z case
  ElemSet members;     // ring case

  std::string text(const FiniteModule& m) const;
  bool operator==(const AnnIdeal& o) const {
    return over_z == o.over_z && generator == o.generator && members == o.members;
  }
};

AnnIdeal annihilator(const FiniteModule& m, const ElemSet& submodule);

// The submodule lattice of M: lattice indices aligned with `members`.
struct SubLattice {
  FinLattice lat;
  std::vector<ElemSet> members;

  int index_of(const ElemSet& s) const;
  const ElemSet& at(int i) const { return members[static_cast<std::size_t>(i)]; }
};

SubLattice enumerate_submodules(const FiniteModule& m, const Caps& caps = {});

// Prime-module test for a non-zero submodule N, via two independent routes:
// (A) every non-zero submodule of N shares ann(N); (B) the element-wise
// criterion rRf = 0 forcing f = 0 or rN = 0. Disagreement is a hard error.
bool is_prime_module(const FiniteModule& m, const SubLattice& subs, int n_idx);

// All first submodules, ascending lattice indices. Empty means firstless.
std::vector<int> spec_first(const FiniteModule& m, const SubLattice& subs);

// Atoms of the submodule lattice.
std::vector<int> simple_submodules(const SubLattice& subs);
int socle(const SubLattice& subs);       // lattice index of the simple sum
int coradical_f(const FiniteModule& m, const SubLattice& subs);

bool is_hollow(const SubLattice& subs, int n_idx);           // ZeroSubmodule
bool is_strongly_hollow(const SubLattice& subs, int n_idx);  // ZeroSubmodule

bool is_uniserial(const SubLattice& subs, int n_idx);
bool is_uniform(const SubLattice& subs);
bool has_essential_socle(const SubLattice& subs);
bool is_colocal(const SubLattice& subs);

// No simple submodule sits inside the sum of the others; cross-checked
// against distributivity of the socle's submodule interval.
bool has_min_property(const FiniteModule& m, const SubLattice& subs);

// H = (H :_R F) F for every submodule H of F / L = (0 :_F (0 :_R L)).
// F defaults to the whole module.
bool is_multiplication(const FiniteModule& m, const SubLattice& subs,
                       int f_idx = -1);
bool is_comultiplication(const FiniteModule& m, const SubLattice& subs,
                         int f_idx = -1);

// (H :_R F) = {r : r F <= H}, an ideal of the coefficient ring.
AnnIdeal colon_ideal(const FiniteModule& m, const ElemSet& h, const ElemSet& f);

// (H :_R M) M and (0 :_M I), the two translation maps.
ElemSet ideal_times_module(const FiniteModule& m, const AnnIdeal& ideal,
                           const ElemSet& ambient);
ElemSet torsion_by(const FiniteModule& m, const AnnIdeal& ideal,
                   const ElemSet& ambient);

// The tau_c topology on Spec^f(M): closed sets are varieties of the
// I-torsion submodules (0 :_M I). A topology unconditionally.
TopSpace torsion_subspace_topology(const FiniteModule& m, const SubLattice& subs);

// Section-2 context over the dual submodule lattice with X = Spec^f(M).
// Firstless when the spectrum is empty.
SpectrumContext spec_f_context(const FiniteModule& m, const SubLattice& subs);

struct TopfResult {
  bool value = true;
  bool firstless = false;
  int witness_a = -1;  // submodule lattice indices
  int witness_b = -1;
  int witness_p = -1;
};

// Union-closure of the variety family; firstless modules report topf with
// the flag set. Strong variant cross-checks strong hollowness of every
// first submodule against the dual-lattice criterion.
TopfResult is_topf_module(const FiniteModule& m, const SubLattice& subs);
TopfResult is_strongly_topf_module(const FiniteModule& m, const SubLattice& subs);

// Irreducible point sets A have I(A) first, cross-checked against the two
// equivalent formulations (non-empty spectra below I(A); distributivity).
// NotTopf when the module is not topf.
bool is_consistent_topf(const FiniteModule& m, const SubLattice& subs,
                        const SampleSpec& sample = {});

// Maximal elements of V(H) = {P in Spec^f : P <= H}. ZeroSubmodule on H = 0.
std::vector<int> maximal_under(const FiniteModule& m, const SubLattice& subs,
                               int h_idx);

// Prop-style report: for comultiplication F, first iff simple; for
// multiplication F, first iff ann(F) prime.
CheckList check_c_ann(const FiniteModule& m, const SubLattice& subs);

bool ann_is_prime(const FiniteModule& m, const AnnIdeal& ann);

// Simple-module isomorphism: order comparison over Z, generator-image
// search over a finite ring.
bool simples_isomorphic(const FiniteModule& m, const ElemSet& s1, const ElemSet& s2);

// Labels a submodule by a greedy minimal generating set.
std::string submodule_label(const FiniteModule& m, const ElemSet& s);

}  // namespace spectop

#endif  // SPECTOP_MODULE_HPP_
