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

#ifndef SPECTOP_TOPOLOGY_HPP_
#define SPECTOP_TOPOLOGY_HPP_

#include <string>
#include <vector>

#include "spectop/checks.hpp"
#include "spectop/elemset.hpp"

namespace spectop {

// A finite topological space stored by its closed-set family, mirroring how
// the variety families arise. Open sets are derived on demand.
struct TopSpace {
  std::vector<std::string> points;
  std::vector<ElemSet> closed;  // bitsets over points, sorted and deduplicated

  std::size_t size() const { return points.size(); }
  ElemSet everything() const { return full_set(points.size()); }
  bool is_closed(const ElemSet& a) const;
};

// Normalizes (sorts, dedups) the family. No topology axioms are enforced
// here; verify_topology reports on them.
TopSpace make_space(std::vector<std::string> points, std::vector<ElemSet> closed);

struct TopologyCheck {
  bool ok = true;
  std::string witness;
};

// Checks that closed contains the empty set and the full point set and is
// closed under pairwise intersection and union.
TopologyCheck verify_topology(const TopSpace& t);

// Smallest closed superset.
ElemSet closure(const TopSpace& t, const ElemSet& a);

std::vector<ElemSet> open_sets(const TopSpace& t);

bool is_t0(const TopSpace& t);
bool is_t1(const TopSpace& t);
bool is_t2(const TopSpace& t);

bool is_discrete(const TopSpace& t);
bool is_connected(const TopSpace& t);
bool is_irreducible_space(const TopSpace& t);   // EmptySpace on empty carrier
bool is_ultraconnected(const TopSpace& t);      // EmptySpace on empty carrier

// Bourbaki irreducibility of a non-empty subset: every pair of closed sets
// covering it already contains it on one side.
bool is_irreducible_subset(const TopSpace& t, const ElemSet& a);

// Literal open-cover check. Candidate covers are drawn from the full open
// family (exhaustively for small families, deterministic sample beyond);
// each cover is asked for a finite subcover.
bool is_compact(const TopSpace& t);
// Same check; on a finite carrier countable covers are finite families.
bool is_countably_compact(const TopSpace& t);

// Chain conditions are automatic on finite families; the maximal strict
// chain length in the closed family is returned as evidence.
struct ChainCondition {
  bool stationary = true;
  int max_chain_len = 0;
};
ChainCondition is_noetherian(const TopSpace& t);
ChainCondition is_artinian(const TopSpace& t);

// Maximal irreducible closed subsets. EmptySpace on empty carrier.
std::vector<ElemSet> irreducible_components(const TopSpace& t);

struct Sobriety {
  bool value = true;
  std::vector<ElemSet> irreducible_closed;
  std::vector<int> generic_point;  // aligned with irreducible_closed; -1 when absent
  std::string witness;
};
Sobriety is_sober(const TopSpace& t);

// DOT rendering of the specialization preorder: edge p -> q iff
// p lies in the closure of {q}.
std::string specialization_dot(const TopSpace& t);

}  // namespace spectop

#endif  // SPECTOP_TOPOLOGY_HPP_
