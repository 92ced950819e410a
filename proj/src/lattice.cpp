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

#include "spectop/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spectop {

namespace {

std::string pair_text(const FinLattice& l, int a, int b) {
  return "(" + l.label(a) + ", " + l.label(b) + ")";
}

// Unique greatest element of `candidates`: the one whose downset swallows
// them all. -1 when absent.
int greatest_of(const std::vector<ElemSet>& down, const ElemSet& candidates) {
  for (auto i = candidates.find_first(); i != ElemSet::npos;
       i = candidates.find_next(i)) {
    if (candidates.is_subset_of(down[i])) return static_cast<int>(i);
  }
  return -1;
}

int least_of(const std::vector<ElemSet>& up, const ElemSet& candidates) {
  for (auto i = candidates.find_first(); i != ElemSet::npos;
       i = candidates.find_next(i)) {
    if (candidates.is_subset_of(up[i])) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

int FinLattice::index_of(const std::string& label) const {
  for (int i = 0; i < n; ++i)
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

FinLattice build_lattice(const std::vector<std::string>& labels,
                         const std::vector<std::pair<int, int>>& leq_pairs,
                         int cap) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) fail(Errc::BadInput, "lattice needs at least one element");
  if (n > cap)
    fail(Errc::TooLarge, "lattice has " + std::to_string(n) +
                             " elements, cap is " + std::to_string(cap));
  {
    std::map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      if (!seen.emplace(labels[static_cast<std::size_t>(i)], i).second)
        fail(Errc::BadInput, "duplicate element label '" +
                                 labels[static_cast<std::size_t>(i)] + "'");
    }
  }

  FinLattice l;
  l.n = n;
  l.labels = labels;

  // Reflexive-transitive closure of the declared pairs, as upset rows.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (const auto& [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::BadInput, "order pair references an undeclared element");
    succ[static_cast<std::size_t>(a)].push_back(b);
  }
  l.up.assign(static_cast<std::size_t>(n), ElemSet(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    ElemSet& reach = l.up[static_cast<std::size_t>(a)];
    std::vector<int> stack{a};
    reach.set(static_cast<std::size_t>(a));
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : succ[static_cast<std::size_t>(x)]) {
        if (!reach.test(static_cast<std::size_t>(y))) {
          reach.set(static_cast<std::size_t>(y));
          stack.push_back(y);
        }
      }
    }
  }

  // Antisymmetry: a cycle makes two distinct elements mutually reachable.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (l.leq(a, b) && l.leq(b, a))
        fail(Errc::NotAPoset, "cycle through " + pair_text(l, a, b));

  l.down.assign(static_cast<std::size_t>(n), ElemSet(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (l.leq(a, b)) l.down[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));

  const ElemSet everything = l.all();
  l.bottom = -1;
  l.top = -1;
  for (int x = 0; x < n; ++x) {
    if (l.up[static_cast<std::size_t>(x)] == everything) l.bottom = x;
    if (l.down[static_cast<std::size_t>(x)] == everything) l.top = x;
  }
  if (l.bottom < 0 || l.top < 0)
    fail(Errc::NoBounds, l.bottom < 0 ? "no global bottom" : "no global top");

  l.meet_tab.assign(static_cast<std::size_t>(n) * n, -1);
  l.join_tab.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const ElemSet lower = l.down[static_cast<std::size_t>(a)] & l.down[static_cast<std::size_t>(b)];
      const int glb = greatest_of(l.down, lower);
      if (glb < 0)
        fail(Errc::NotALattice, "no unique meet for " + pair_text(l, a, b));
      const ElemSet upper = l.up[static_cast<std::size_t>(a)] & l.up[static_cast<std::size_t>(b)];
      const int lub = least_of(l.up, upper);
      if (lub < 0)
        fail(Errc::NotALattice, "no unique join for " + pair_text(l, a, b));
      l.meet_tab[static_cast<std::size_t>(a) * n + b] = glb;
      l.meet_tab[static_cast<std::size_t>(b) * n + a] = glb;
      l.join_tab[static_cast<std::size_t>(a) * n + b] = lub;
      l.join_tab[static_cast<std::size_t>(b) * n + a] = lub;
    }
  }
  return l;
}

FinLattice build_lattice_labeled(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    int cap) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    index[labels[static_cast<std::size_t>(i)]] = i;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(leq_pairs.size());
  for (const auto& [a, b] : leq_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      fail(Errc::BadInput, "order pair references undeclared label '" +
                               (ia == index.end() ? a : b) + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return build_lattice(labels, pairs, cap);
}

int meet_all(const FinLattice& l, const ElemSet& s) {
  int acc = l.top;
  for_each_member(s, [&](int x) { acc = l.meet(acc, x); });
  return acc;
}

int join_all(const FinLattice& l, const ElemSet& s) {
  int acc = l.bottom;
  for_each_member(s, [&](int x) { acc = l.join(acc, x); });
  return acc;
}

bool is_irreducible(const FinLattice& l, const ElemSet& ground, int p) {
  if (!ground.test(static_cast<std::size_t>(p)))
    fail(Errc::BadInput, "element " + l.label(p) + " is not in the ground set");
  const auto members = members_of(ground);
  for (int a : members)
    for (int b : members)
      if (!ground.test(static_cast<std::size_t>(l.meet(a, b))))
        fail(Errc::GroundNotMeetClosed,
             "ground not closed under meet at " + pair_text(l, a, b));
  for (int a : members) {
    if (!l.leq(p, a)) continue;
    for (int b : members) {
      if (!l.leq(p, b)) continue;
      if (l.leq(l.meet(a, b), p) && !l.leq(a, p) && !l.leq(b, p)) return false;
    }
  }
  return true;
}

bool is_strongly_irreducible(const FinLattice& l, const ElemSet& ground, int p) {
  if (!ground.test(static_cast<std::size_t>(p)))
    fail(Errc::BadInput, "element " + l.label(p) + " is not in the ground set");
  const auto members = members_of(ground);
  for (int a : members)
    for (int b : members)
      if (l.leq(l.meet(a, b), p) && !l.leq(a, p) && !l.leq(b, p)) return false;
  return true;
}

bool is_distributive(const FinLattice& l, const ElemSet& ground,
                     const LatticeOp& meet_fn, const LatticeOp& join_fn) {
  const auto members = members_of(ground);
  for (int a : members) {
    for (int b : members) {
      if (!ground.test(static_cast<std::size_t>(meet_fn(a, b))) ||
          !ground.test(static_cast<std::size_t>(join_fn(a, b))))
        fail(Errc::GroundNotClosed,
             "ground not closed under the supplied operations at " +
                 pair_text(l, a, b));
    }
  }
  for (int a : members)
    for (int b : members)
      for (int c : members)
        if (meet_fn(a, join_fn(b, c)) !=
            join_fn(meet_fn(a, b), meet_fn(a, c)))
          return false;
  return true;
}

bool is_distributive(const FinLattice& l, const ElemSet& ground) {
  return is_distributive(
      l, ground, [&](int a, int b) { return l.meet(a, b); },
      [&](int a, int b) { return l.join(a, b); });
}

bool is_chain(const FinLattice& l, const ElemSet& s) {
  const auto members = members_of(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!l.leq(members[i], members[j]) && !l.leq(members[j], members[i]))
        return false;
  return true;
}

FinLattice dual(const FinLattice& l) {
  FinLattice d;
  d.n = l.n;
  d.labels = l.labels;
  d.up = l.down;
  d.down = l.up;
  d.meet_tab = l.join_tab;
  d.join_tab = l.meet_tab;
  d.bottom = l.top;
  d.top = l.bottom;
  return d;
}

ElemSet upset(const FinLattice& l, int x) { return l.up[static_cast<std::size_t>(x)]; }

ElemSet downset(const FinLattice& l, int x) { return l.down[static_cast<std::size_t>(x)]; }

CheckList verify_lattice_axioms(const FinLattice& l) {
  CheckList out;
  const int n = l.n;

  auto& order = out.add("order is a bounded partial order");
  for (int a = 0; a < n && order.pass; ++a) {
    ++order.cases;
    if (!l.leq(a, a)) {
      order.pass = false;
      order.witness = "leq not reflexive at " + l.label(a);
    }
    if (!l.leq(l.bottom, a) || !l.leq(a, l.top)) {
      order.pass = false;
      order.witness = "bounds fail at " + l.label(a);
    }
  }
  for (int a = 0; a < n && order.pass; ++a) {
    for (int b = 0; b < n && order.pass; ++b) {
      ++order.cases;
      if (a != b && l.leq(a, b) && l.leq(b, a)) {
        order.pass = false;
        order.witness = "antisymmetry fails at " + pair_text(l, a, b);
      }
      for (int c = 0; c < n; ++c) {
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) {
          order.pass = false;
          order.witness = "transitivity fails through " + l.label(b);
          break;
        }
      }
    }
  }

  auto& universal = out.add("meet/join satisfy their universal properties");
  for (int a = 0; a < n && universal.pass; ++a) {
    for (int b = 0; b < n && universal.pass; ++b) {
      ++universal.cases;
      const int m = l.meet(a, b);
      const int j = l.join(a, b);
      if (!l.leq(m, a) || !l.leq(m, b)) {
        universal.pass = false;
        universal.witness = "meet" + pair_text(l, a, b) + " = " + l.label(m) +
                            " is not a lower bound";
        break;
      }
      if (!l.leq(a, j) || !l.leq(b, j)) {
        universal.pass = false;
        universal.witness = "join" + pair_text(l, a, b) + " = " + l.label(j) +
                            " is not an upper bound";
        break;
      }
      for (int c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, m)) {
          universal.pass = false;
          universal.witness = "meet" + pair_text(l, a, b) +
                              " misses lower bound " + l.label(c);
          break;
        }
        if (l.leq(a, c) && l.leq(b, c) && !l.leq(j, c)) {
          universal.pass = false;
          universal.witness = "join" + pair_text(l, a, b) +
                              " misses upper bound " + l.label(c);
          break;
        }
      }
    }
  }

  auto& semilattice = out.add("meet/join commutative, idempotent, absorbing");
  for (int a = 0; a < n && semilattice.pass; ++a) {
    for (int b = 0; b < n; ++b) {
      ++semilattice.cases;
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a) ||
          l.meet(a, a) != a || l.join(a, a) != a ||
          l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
        semilattice.pass = false;
        semilattice.witness = "semilattice law fails at " + pair_text(l, a, b);
        break;
      }
    }
  }

  auto& assoc = out.add("meet/join associative");
  for (int a = 0; a < n && assoc.pass; ++a) {
    for (int b = 0; b < n && assoc.pass; ++b) {
      for (int c = 0; c < n; ++c) {
        ++assoc.cases;
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c) ||
            l.join(a, l.join(b, c)) != l.join(l.join(a, b), c)) {
          assoc.pass = false;
          assoc.witness = "associativity fails at (" + l.label(a) + ", " +
                          l.label(b) + ", " + l.label(c) + ")";
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace spectop
