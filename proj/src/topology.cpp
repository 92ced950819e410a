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

#include "spectop/topology.hpp"

#include <algorithm>
#include <sstream>

#include "spectop/errors.hpp"

namespace spectop {

namespace {

std::string set_text(const TopSpace& t, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](int p) {
    if (!first) out += ",";
    out += t.points[static_cast<std::size_t>(p)];
    first = false;
  });
  return out + "}";
}

void require_non_empty(const TopSpace& t) {
  if (t.points.empty()) fail(Errc::EmptySpace, "the space has no points");
}

// Greedy finite subcover of `cover`; empty result means none exists.
bool has_finite_subcover(const TopSpace& t, const std::vector<ElemSet>& cover) {
  ElemSet reached(t.points.size());
  std::vector<ElemSet> chosen;
  const ElemSet everything = t.everything();
  while (reached != everything) {
    int best = -1;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const std::size_t gain = (cover[i] - reached).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) return false;  // cover does not actually cover
    reached |= cover[static_cast<std::size_t>(best)];
    chosen.push_back(cover[static_cast<std::size_t>(best)]);
  }
  return true;
}

}  // namespace

bool TopSpace::is_closed(const ElemSet& a) const {
  return std::binary_search(closed.begin(), closed.end(), a);
}

TopSpace make_space(std::vector<std::string> points, std::vector<ElemSet> family) {
  TopSpace t;
  t.points = std::move(points);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  t.closed = std::move(family);
  return t;
}

TopologyCheck verify_topology(const TopSpace& t) {
  TopologyCheck r;
  const ElemSet empty(t.points.size());
  if (!t.is_closed(empty)) {
    return {false, "empty set is not closed"};
  }
  if (!t.is_closed(t.everything())) {
    return {false, "full point set is not closed"};
  }
  for (std::size_t i = 0; i < t.closed.size(); ++i) {
    for (std::size_t j = i + 1; j < t.closed.size(); ++j) {
      if (!t.is_closed(t.closed[i] & t.closed[j]))
        return {false, "intersection of " + set_text(t, t.closed[i]) + " and " +
                           set_text(t, t.closed[j]) + " is not closed"};
      if (!t.is_closed(t.closed[i] | t.closed[j]))
        return {false, "union of " + set_text(t, t.closed[i]) + " and " +
                           set_text(t, t.closed[j]) + " is not closed"};
    }
  }
  return r;
}

ElemSet closure(const TopSpace& t, const ElemSet& a) {
  ElemSet acc = t.everything();
  for (const auto& c : t.closed)
    if (a.is_subset_of(c)) acc &= c;
  return acc;
}

std::vector<ElemSet> open_sets(const TopSpace& t) {
  std::vector<ElemSet> out;
  out.reserve(t.closed.size());
  for (const auto& c : t.closed) out.push_back(~c);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_t0(const TopSpace& t) {
  const int n = static_cast<int>(t.points.size());
  for (int p = 0; p < n; ++p) {
    ElemSet sp(t.points.size());
    sp.set(static_cast<std::size_t>(p));
    for (int q = p + 1; q < n; ++q) {
      ElemSet sq(t.points.size());
      sq.set(static_cast<std::size_t>(q));
      if (closure(t, sp) == closure(t, sq)) return false;
    }
  }
  return true;
}

bool is_t1(const TopSpace& t) {
  for (std::size_t p = 0; p < t.points.size(); ++p) {
    ElemSet s(t.points.size());
    s.set(p);
    if (!t.is_closed(s)) return false;
  }
  return true;
}

bool is_t2(const TopSpace& t) {
  const auto opens = open_sets(t);
  const int n = static_cast<int>(t.points.size());
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      bool separated = false;
      for (const auto& u : opens) {
        if (!u.test(static_cast<std::size_t>(p))) continue;
        for (const auto& v : opens) {
          if (!v.test(static_cast<std::size_t>(q))) continue;
          if (!u.intersects(v)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool is_discrete(const TopSpace& t) {
  const std::size_t n = t.points.size();
  if (n <= 30) return t.closed.size() == (1ull << n);
  return is_t1(t);  // family is union/intersection closed, singletons decide
}

bool is_connected(const TopSpace& t) {
  const ElemSet empty(t.points.size());
  const ElemSet everything = t.everything();
  for (const auto& c : t.closed) {
    if (c == empty || c == everything) continue;
    if (t.is_closed(~c)) return false;  // proper clopen set
  }
  return true;
}

bool is_irreducible_space(const TopSpace& t) {
  require_non_empty(t);
  const ElemSet everything = t.everything();
  for (const auto& a : t.closed) {
    if (a == everything) continue;
    for (const auto& b : t.closed) {
      if (b == everything) continue;
      if ((a | b) == everything) return false;
    }
  }
  return true;
}

bool is_ultraconnected(const TopSpace& t) {
  require_non_empty(t);
  for (const auto& a : t.closed) {
    if (a.none()) continue;
    for (const auto& b : t.closed) {
      if (b.none()) continue;
      if (!a.intersects(b)) return false;
    }
  }
  return true;
}

bool is_irreducible_subset(const TopSpace& t, const ElemSet& a) {
  if (a.none()) fail(Errc::EmptySet, "irreducibility needs a non-empty subset");
  for (const auto& c1 : t.closed) {
    for (const auto& c2 : t.closed) {
      if (a.is_subset_of(c1 | c2) && !a.is_subset_of(c1) && !a.is_subset_of(c2))
        return false;
    }
  }
  return true;
}

bool is_compact(const TopSpace& t) {
  const auto opens = open_sets(t);
  ElemSet family_universe(opens.size());
  family_universe.set();
  for (const auto& subfamily : subsets_of(family_universe, SampleSpec{})) {
    std::vector<ElemSet> cover;
    ElemSet covered(t.points.size());
    for_each_member(subfamily, [&](int i) {
      cover.push_back(opens[static_cast<std::size_t>(i)]);
      covered |= opens[static_cast<std::size_t>(i)];
    });
    if (covered != t.everything()) continue;  // not a cover
    if (!has_finite_subcover(t, cover)) return false;
  }
  return true;
}

bool is_countably_compact(const TopSpace& t) { return is_compact(t); }

namespace {

ChainCondition longest_chain(const TopSpace& t) {
  // Longest strict inclusion chain in the closed family; the family is
  // sorted, so a subset precedes its supersets never holds in general —
  // order by popcount first.
  std::vector<std::size_t> order(t.closed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = t.closed[a].count(), cb = t.closed[b].count();
    return ca != cb ? ca < cb : t.closed[a] < t.closed[b];
  });
  std::vector<int> best(t.closed.size(), 1);
  int overall = t.closed.empty() ? 0 : 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto &small = t.closed[order[j]], &big = t.closed[order[i]];
      if (small != big && small.is_subset_of(big))
        best[i] = std::max(best[i], best[j] + 1);
    }
    overall = std::max(overall, best[i]);
  }
  return {true, overall};
}

}  // namespace

ChainCondition is_noetherian(const TopSpace& t) { return longest_chain(t); }

ChainCondition is_artinian(const TopSpace& t) { return longest_chain(t); }

std::vector<ElemSet> irreducible_components(const TopSpace& t) {
  require_non_empty(t);
  std::vector<ElemSet> irreducible;
  for (const auto& c : t.closed)
    if (c.any() && is_irreducible_subset(t, c)) irreducible.push_back(c);
  std::vector<ElemSet> components;
  for (const auto& c : irreducible) {
    bool maximal = true;
    for (const auto& d : irreducible) {
      if (c != d && c.is_subset_of(d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) components.push_back(c);
  }
  return components;
}

Sobriety is_sober(const TopSpace& t) {
  Sobriety r;
  for (const auto& c : t.closed) {
    if (c.none()) continue;
    if (!is_irreducible_subset(t, c)) continue;
    r.irreducible_closed.push_back(c);
    int generic = -1;
    int count = 0;
    for_each_member(c, [&](int p) {
      ElemSet s(t.points.size());
      s.set(static_cast<std::size_t>(p));
      if (closure(t, s) == c) {
        ++count;
        if (generic < 0) generic = p;
      }
    });
    r.generic_point.push_back(count == 1 ? generic : -1);
    if (count != 1) {
      r.value = false;
      if (r.witness.empty())
        r.witness = set_text(t, c) + " has " + std::to_string(count) +
                    " generic points";
    }
  }
  return r;
}

std::string specialization_dot(const TopSpace& t) {
  std::ostringstream os;
  os << "digraph specialization {\n";
  for (std::size_t p = 0; p < t.points.size(); ++p)
    os << "  \"" << t.points[p] << "\";\n";
  for (std::size_t q = 0; q < t.points.size(); ++q) {
    ElemSet s(t.points.size());
    s.set(q);
    const ElemSet cl = closure(t, s);
    for_each_member(cl, [&](int p) {
      if (static_cast<std::size_t>(p) != q)
        os << "  \"" << t.points[static_cast<std::size_t>(p)] << "\" -> \""
           << t.points[q] << "\";\n";
    });
  }
  os << "}\n";
  return os.str();
}

}  // namespace spectop
