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

#include "spectop/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "spectop/errors.hpp"

namespace spectop {

namespace {

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t");
  return s.substr(from, to - from + 1);
}

void verify_module_axioms(const FiniteModule& m) {
  const int n = m.n;
  for (int x = 0; x < n; ++x) {
    if (m.plus(m.zero, x) != x) fail(Errc::BadInput, "zero is not neutral");
    for (int y = 0; y < n; ++y) {
      if (m.plus(x, y) != m.plus(y, x))
        fail(Errc::BadInput, "module addition not commutative");
      for (int z = 0; z < n; ++z)
        if (m.plus(m.plus(x, y), z) != m.plus(x, m.plus(y, z)))
          fail(Errc::BadInput, "module addition not associative");
    }
  }
  if (m.over_z()) {
    const int e = m.exponent();
    for (int x = 0; x < n; ++x) {
      // r.x must be iterated addition, and e.x = 0.
      int acc = m.zero;
      for (int r = 0; r < e; ++r) {
        if (m.scale(r, x) != acc)
          fail(Errc::BadInput, "Z-action is not iterated addition");
        acc = m.plus(acc, x);
      }
      if (acc != m.zero)
        fail(Errc::BadInput, "module exponent does not kill every element");
    }
  } else {
    const FiniteRing& r = m.ring();
    for (int x = 0; x < n; ++x)
      if (m.scale(r.one, x) != x) fail(Errc::BadInput, "unit does not act as identity");
    for (int s = 0; s < r.n; ++s) {
      for (int t = 0; t < r.n; ++t) {
        for (int x = 0; x < n; ++x) {
          if (m.scale(r.times(s, t), x) != m.scale(s, m.scale(t, x)))
            fail(Errc::BadInput, "action not associative");
          if (m.scale(r.plus(s, t), x) != m.plus(m.scale(s, x), m.scale(t, x)))
            fail(Errc::BadInput, "action not additive in scalars");
        }
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (m.scale(s, m.plus(x, y)) != m.plus(m.scale(s, x), m.scale(s, y)))
            fail(Errc::BadInput, "action not additive in elements");
    }
  }
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Additive order of x.
int order_of(const FiniteModule& m, int x) {
  int acc = x;
  int k = 1;
  while (acc != m.zero) {
    acc = m.plus(acc, x);
    ++k;
  }
  return k;
}

int require_nonzero(const SubLattice& subs, int idx, const char* what) {
  if (idx == subs.lat.bottom)
    fail(Errc::ZeroSubmodule, std::string(what) + " needs a non-zero submodule");
  return idx;
}

std::vector<int> divisors_of(int e) {
  std::vector<int> out;
  for (int d = 1; d <= e; ++d)
    if (e % d == 0) out.push_back(d);
  return out;
}

}  // namespace

AnnIdeal colon_ideal(const FiniteModule& m, const ElemSet& h, const ElemSet& f) {
  AnnIdeal out;
  if (m.over_z()) {
    const int e = m.exponent();
    long g = e;
    for (int r = 1; r < e; ++r) {
      bool into = true;
      for (auto x = f.find_first(); x != ElemSet::npos && into; x = f.find_next(x))
        into = h.test(static_cast<std::size_t>(m.scale(r, static_cast<int>(x))));
      if (into) g = std::gcd(g, static_cast<long>(r));
    }
    out.over_z = true;
    out.generator = g;
    return out;
  }
  const FiniteRing& r = m.ring();
  out.over_z = false;
  out.members = ElemSet(static_cast<std::size_t>(r.n));
  for (int s = 0; s < r.n; ++s) {
    bool into = true;
    for (auto x = f.find_first(); x != ElemSet::npos && into; x = f.find_next(x))
      into = h.test(static_cast<std::size_t>(m.scale(s, static_cast<int>(x))));
    if (into) out.members.set(static_cast<std::size_t>(s));
  }
  if (!is_two_sided_ideal(r, out.members))
    fail(Errc::OracleDisagreement, "colon ideal is not two-sided");
  return out;
}

std::string AnnIdeal::text(const FiniteModule& m) const {
  if (over_z) return std::to_string(generator) + "Z";
  std::string out = "(";
  bool first = true;
  for_each_member(members, [&](int x) {
    if (!first) out += ",";
    out += m.ring().labels[static_cast<std::size_t>(x)];
    first = false;
  });
  return out + ")";
}

FiniteModule z_module(const std::vector<int>& summands, const Caps& caps) {
  if (summands.empty()) fail(Errc::BadSpec, "Z-module needs at least one summand");
  long order = 1;
  long exponent = 1;
  for (int d : summands) {
    if (d < 2) fail(Errc::BadSpec, "every summand must be at least 2");
    order *= d;
    exponent = lcm_long(exponent, d);
    if (order > caps.max_order)
      fail(Errc::TooLarge, "module order " + std::to_string(order) +
                               " exceeds cap " + std::to_string(caps.max_order));
  }
  FiniteModule m;
  m.coeff = ZCoefficients{static_cast<int>(exponent)};
  m.n = static_cast<int>(order);
  m.zero = 0;
  const int k = static_cast<int>(summands.size());
  auto digits = [&](int code) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      out[static_cast<std::size_t>(i)] = code % summands[static_cast<std::size_t>(i)];
      code /= summands[static_cast<std::size_t>(i)];
    }
    return out;
  };
  auto encode = [&](const std::vector<int>& ds) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i)
      code = code * summands[static_cast<std::size_t>(i)] + ds[static_cast<std::size_t>(i)];
    return code;
  };
  m.labels.reserve(static_cast<std::size_t>(m.n));
  for (int x = 0; x < m.n; ++x) {
    const auto ds = digits(x);
    std::string label = "(";
    for (int i = 0; i < k; ++i) {
      if (i) label += ",";
      label += std::to_string(ds[static_cast<std::size_t>(i)]);
    }
    m.labels.push_back(label + ")");
  }
  m.add.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int x = 0; x < m.n; ++x) {
    const auto dx = digits(x);
    for (int y = 0; y < m.n; ++y) {
      auto dy = digits(y);
      for (int i = 0; i < k; ++i)
        dy[static_cast<std::size_t>(i)] =
            (dy[static_cast<std::size_t>(i)] + dx[static_cast<std::size_t>(i)]) %
            summands[static_cast<std::size_t>(i)];
      m.add[static_cast<std::size_t>(x) * m.n + y] = encode(dy);
    }
  }
  const int e = static_cast<int>(exponent);
  m.act.assign(static_cast<std::size_t>(e) * m.n, 0);
  for (int x = 0; x < m.n; ++x) {
    int acc = m.zero;
    for (int r = 0; r < e; ++r) {
      m.act[static_cast<std::size_t>(r) * m.n + x] = acc;
      acc = m.plus(acc, x);
    }
  }
  verify_module_axioms(m);
  return m;
}

FiniteModule regular_module(const FiniteRing& r) {
  FiniteModule m;
  m.n = r.n;
  m.labels = r.labels;
  m.add = r.add;
  m.act = r.mul;
  m.zero = r.zero;
  m.coeff = r;
  verify_module_axioms(m);
  return m;
}

FiniteModule column_module(int q) {
  const FiniteRing r = matrix_ring(q);
  FiniteModule m;
  m.coeff = r;
  m.n = q * q;
  m.zero = 0;
  auto vec = [&](int code) { return std::pair<int, int>{code % q, code / q}; };
  auto venc = [&](int a, int b) { return b * q + a; };
  for (int v = 0; v < m.n; ++v) {
    const auto [a, b] = vec(v);
    m.labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  // Reuse the ring's arithmetic through its own tables: field addition is
  // matrix addition of diagonal embeddings, so compute in F_q directly.
  auto fadd = [&](int a, int b) { return q == 4 ? (a ^ b) : (a + b) % q; };
  auto fmul = [&](int a, int b) {
    if (q != 4) return (a * b) % q;
    if (a == 0 || b == 0) return 0;
    static constexpr int table[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    return table[a - 1][b - 1];
  };
  m.add.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y) {
      const auto [xa, xb] = vec(x);
      const auto [ya, yb] = vec(y);
      m.add[static_cast<std::size_t>(x) * m.n + y] = venc(fadd(xa, ya), fadd(xb, yb));
    }
  m.act.assign(static_cast<std::size_t>(r.n) * m.n, 0);
  for (int s = 0; s < r.n; ++s) {
    // Matrix entry layout matches matrix_ring: [[a,b],[c,d]] encoded a,b,c,d.
    int code = s;
    const int a = code % q;
    code /= q;
    const int b = code % q;
    code /= q;
    const int c = code % q;
    code /= q;
    const int d = code % q;
    for (int x = 0; x < m.n; ++x) {
      const auto [v0, v1] = vec(x);
      m.act[static_cast<std::size_t>(s) * m.n + x] =
          venc(fadd(fmul(a, v0), fmul(b, v1)), fadd(fmul(c, v0), fmul(d, v1)));
    }
  }
  verify_module_axioms(m);
  return m;
}

FiniteModule parse_module_spec(const std::string& spec, const Caps& caps) {
  const std::string s = trim(spec);
  if (s.rfind("Z:", 0) == 0) {
    std::vector<int> summands;
    std::stringstream ss(s.substr(2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string v = trim(item);
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::BadSpec, "bad summand '" + v + "' in '" + spec + "'");
      summands.push_back(std::stoi(v));
    }
    FiniteModule m = z_module(summands, caps);
    m.spec = s;
    return m;
  }
  if (s.rfind("ring ", 0) == 0) {
    const std::string rest = trim(s.substr(5));
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos)
      fail(Errc::BadSpec, "ring spec needs ': regular' or ': column'");
    const std::string ring_name = trim(rest.substr(0, colon));
    const std::string variant = trim(rest.substr(colon + 1));
    FiniteModule m;
    if (ring_name.rfind("M2F", 0) == 0) {
      const std::string qs = ring_name.substr(3);
      if (qs.empty() || qs.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::BadSpec, "bad matrix ring '" + ring_name + "'");
      const int q = std::stoi(qs);
      if (variant == "regular")
        m = regular_module(matrix_ring(q));
      else if (variant == "column")
        m = column_module(q);
      else
        fail(Errc::BadSpec, "unknown variant '" + variant + "'");
    } else if (ring_name.rfind("Zmod:", 0) == 0) {
      const std::string ns = ring_name.substr(5);
      if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::BadSpec, "bad modulus '" + ns + "'");
      if (variant != "regular")
        fail(Errc::BadSpec, "Zmod modules only come as ': regular'");
      m = regular_module(zmod_ring(std::stoi(ns), caps.max_order));
    } else {
      fail(Errc::BadSpec, "unknown ring '" + ring_name + "'");
    }
    if (m.n > caps.max_order)
      fail(Errc::TooLarge, "module order exceeds cap");
    m.spec = s;
    return m;
  }
  fail(Errc::BadSpec, "cannot parse module spec '" + spec + "'");
}

ElemSet span(const FiniteModule& m, ElemSet seed) {
  seed.set(static_cast<std::size_t>(m.zero));
  std::vector<int> queue = members_of(seed);
  ElemSet out = std::move(seed);
  auto push = [&](int x) {
    if (!out.test(static_cast<std::size_t>(x))) {
      out.set(static_cast<std::size_t>(x));
      queue.push_back(x);
    }
  };
  const int scalars = m.scalar_count();
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    for (auto y = out.find_first(); y != ElemSet::npos; y = out.find_next(y))
      push(m.plus(x, static_cast<int>(y)));
    for (int r = 0; r < scalars; ++r) push(m.scale(r, x));
  }
  return out;
}

bool is_submodule(const FiniteModule& m, const ElemSet& s) {
  if (!s.test(static_cast<std::size_t>(m.zero))) return false;
  bool ok = true;
  for_each_member(s, [&](int x) {
    for_each_member(s, [&](int y) {
      ok = ok && s.test(static_cast<std::size_t>(m.plus(x, y)));
    });
    for (int r = 0; r < m.scalar_count() && ok; ++r)
      ok = ok && s.test(static_cast<std::size_t>(m.scale(r, x)));
  });
  return ok;
}

AnnIdeal annihilator(const FiniteModule& m, const ElemSet& submodule) {
  AnnIdeal out;
  if (m.over_z()) {
    long g = 1;
    for_each_member(submodule, [&](int x) {
      g = lcm_long(g, order_of(m, x));
    });
    out.over_z = true;
    out.generator = g;
    return out;
  }
  const FiniteRing& r = m.ring();
  out.over_z = false;
  out.members = ElemSet(static_cast<std::size_t>(r.n));
  for (int s = 0; s < r.n; ++s) {
    bool kills = true;
    for (auto x = submodule.find_first(); x != ElemSet::npos && kills;
         x = submodule.find_next(x))
      kills = m.scale(s, static_cast<int>(x)) == m.zero;
    if (kills) out.members.set(static_cast<std::size_t>(s));
  }
  if (!is_two_sided_ideal(r, out.members))
    fail(Errc::OracleDisagreement, "annihilator is not a two-sided ideal");
  return out;
}

std::string submodule_label(const FiniteModule& m, const ElemSet& s) {
  if (s.count() == 1) return "0";
  if (s.count() == static_cast<std::size_t>(m.n)) return "M";
  ElemSet current(static_cast<std::size_t>(m.n));
  current.set(static_cast<std::size_t>(m.zero));
  std::string gens;
  while (current != s) {
    const int g = static_cast<int>((s - current).find_first());
    ElemSet seed = current;
    seed.set(static_cast<std::size_t>(g));
    current = span(m, std::move(seed));
    if (!gens.empty()) gens += ",";
    gens += m.labels[static_cast<std::size_t>(g)];
  }
  return "<" + gens + ">";
}

int SubLattice::index_of(const ElemSet& s) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == s) return static_cast<int>(i);
  return -1;
}

SubLattice enumerate_submodules(const FiniteModule& m, const Caps& caps) {
  if (m.n > caps.max_order) fail(Errc::TooLarge, "module order exceeds cap");
  std::set<ElemSet> found;
  std::vector<ElemSet> worklist;
  ElemSet zero_only(static_cast<std::size_t>(m.n));
  zero_only.set(static_cast<std::size_t>(m.zero));
  found.insert(zero_only);
  worklist.push_back(zero_only);
  while (!worklist.empty()) {
    const ElemSet current = worklist.back();
    worklist.pop_back();
    for (int x = 0; x < m.n; ++x) {
      if (current.test(static_cast<std::size_t>(x))) continue;
      ElemSet seed = current;
      seed.set(static_cast<std::size_t>(x));
      ElemSet bigger = span(m, std::move(seed));
      if (found.insert(bigger).second) {
        if (static_cast<int>(found.size()) > caps.max_submodules)
          fail(Errc::TooLarge, "submodule count exceeds cap");
        worklist.push_back(bigger);
      }
    }
  }
  SubLattice out;
  out.members.assign(found.begin(), found.end());
  std::vector<std::string> labels;
  labels.reserve(out.members.size());
  for (const auto& s : out.members) labels.push_back(submodule_label(m, s));
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = 0; j < out.members.size(); ++j)
      if (out.members[i].is_subset_of(out.members[j]))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  out.lat = build_lattice(labels, pairs,
                          std::max(kDefaultLatticeCap,
                                   static_cast<int>(out.members.size())));
  return out;
}

bool is_prime_module(const FiniteModule& m, const SubLattice& subs, int n_idx) {
  require_nonzero(subs, n_idx, "prime-module test");
  const ElemSet& big = subs.at(n_idx);
  const AnnIdeal ann_n = annihilator(m, big);

  bool shared_ann = true;
  for (int h = 0; h < subs.lat.n && shared_ann; ++h) {
    if (h == subs.lat.bottom || !subs.lat.leq(h, n_idx)) continue;
    shared_ann = annihilator(m, subs.at(h)) == ann_n;
  }

  bool elementwise = true;
  const int scalars = m.scalar_count();
  for (int r = 0; r < scalars && elementwise; ++r) {
    // rN = 0?
    bool kills_all = true;
    for (auto x = big.find_first(); x != ElemSet::npos && kills_all;
         x = big.find_next(x))
      kills_all = m.scale(r, static_cast<int>(x)) == m.zero;
    if (kills_all) continue;
    for (auto f = big.find_first(); f != ElemSet::npos && elementwise;
         f = big.find_next(f)) {
      if (static_cast<int>(f) == m.zero) continue;
      bool rRf_zero = true;
      if (m.over_z()) {
        rRf_zero = m.scale(r, static_cast<int>(f)) == m.zero;
      } else {
        for (int s = 0; s < scalars && rRf_zero; ++s)
          rRf_zero = m.scale(r, m.scale(s, static_cast<int>(f))) == m.zero;
      }
      if (rRf_zero) elementwise = false;  // rRf = 0 with f != 0 and rN != 0
    }
  }

  if (shared_ann != elementwise)
    fail(Errc::OracleDisagreement,
         "prime-module oracles disagree on " + subs.lat.label(n_idx));
  return shared_ann;
}

std::vector<int> spec_first(const FiniteModule& m, const SubLattice& subs) {
  std::vector<int> out;
  for (int i = 0; i < subs.lat.n; ++i)
    if (i != subs.lat.bottom && is_prime_module(m, subs, i)) out.push_back(i);
  return out;
}

std::vector<int> simple_submodules(const SubLattice& subs) {
  std::vector<int> out;
  for (int i = 0; i < subs.lat.n; ++i)
    if (i != subs.lat.bottom && downset(subs.lat, i).count() == 2) out.push_back(i);
  return out;
}

int socle(const SubLattice& subs) {
  ElemSet simples(static_cast<std::size_t>(subs.lat.n));
  for (int s : simple_submodules(subs)) simples.set(static_cast<std::size_t>(s));
  return join_all(subs.lat, simples);
}

int coradical_f(const FiniteModule& m, const SubLattice& subs) {
  ElemSet firsts(static_cast<std::size_t>(subs.lat.n));
  for (int f : spec_first(m, subs)) firsts.set(static_cast<std::size_t>(f));
  return join_all(subs.lat, firsts);
}

bool is_hollow(const SubLattice& subs, int n_idx) {
  require_nonzero(subs, n_idx, "hollowness");
  const FinLattice d = dual(subs.lat);
  return is_irreducible(d, d.all(), n_idx);
}

bool is_strongly_hollow(const SubLattice& subs, int n_idx) {
  require_nonzero(subs, n_idx, "strong hollowness");
  const FinLattice d = dual(subs.lat);
  return is_strongly_irreducible(d, d.all(), n_idx);
}

bool is_uniserial(const SubLattice& subs, int n_idx) {
  return is_chain(subs.lat, downset(subs.lat, n_idx));
}

bool is_uniform(const SubLattice& subs) {
  for (int a = 0; a < subs.lat.n; ++a) {
    if (a == subs.lat.bottom) continue;
    for (int b = 0; b < subs.lat.n; ++b) {
      if (b == subs.lat.bottom) continue;
      if (subs.lat.meet(a, b) == subs.lat.bottom) return false;
    }
  }
  return true;
}

bool has_essential_socle(const SubLattice& subs) {
  const int soc = socle(subs);
  for (int a = 0; a < subs.lat.n; ++a) {
    if (a == subs.lat.bottom) continue;
    if (subs.lat.meet(soc, a) == subs.lat.bottom) return false;
  }
  return true;
}

bool is_colocal(const SubLattice& subs) {
  int acc = subs.lat.top;
  for (int a = 0; a < subs.lat.n; ++a) {
    if (a == subs.lat.bottom) continue;
    acc = subs.lat.meet(acc, a);
  }
  return acc != subs.lat.bottom;
}

bool has_min_property(const FiniteModule& m, const SubLattice& subs) {
  const auto simples = simple_submodules(subs);
  bool direct = true;
  for (std::size_t i = 0; i < simples.size() && direct; ++i) {
    int rest = subs.lat.bottom;
    for (std::size_t j = 0; j < simples.size(); ++j)
      if (j != i) rest = subs.lat.join(rest, simples[j]);
    if (subs.lat.leq(simples[i], rest)) direct = false;
  }
  const bool via_distributivity =
      is_distributive(subs.lat, downset(subs.lat, socle(subs)));
  if (direct != via_distributivity)
    fail(Errc::OracleDisagreement,
         "min-property oracles disagree on " + m.spec);
  return direct;
}

ElemSet ideal_times_module(const FiniteModule& m, const AnnIdeal& ideal,
                           const ElemSet& ambient) {
  ElemSet seed(static_cast<std::size_t>(m.n));
  if (m.over_z()) {
    const int g = static_cast<int>(ideal.generator % m.exponent());
    for_each_member(ambient, [&](int x) {
      seed.set(static_cast<std::size_t>(m.scale(g, x)));
    });
  } else {
    for_each_member(ideal.members, [&](int s) {
      for_each_member(ambient, [&](int x) {
        seed.set(static_cast<std::size_t>(m.scale(s, x)));
      });
    });
  }
  return span(m, std::move(seed));
}

ElemSet torsion_by(const FiniteModule& m, const AnnIdeal& ideal,
                   const ElemSet& ambient) {
  ElemSet out(static_cast<std::size_t>(m.n));
  if (m.over_z()) {
    const int g = static_cast<int>(ideal.generator % m.exponent());
    for_each_member(ambient, [&](int x) {
      if (m.scale(g, x) == m.zero) out.set(static_cast<std::size_t>(x));
    });
    return out;
  }
  for_each_member(ambient, [&](int x) {
    bool killed = true;
    for (auto s = ideal.members.find_first(); s != ElemSet::npos && killed;
         s = ideal.members.find_next(s))
      killed = m.scale(static_cast<int>(s), x) == m.zero;
    if (killed) out.set(static_cast<std::size_t>(x));
  });
  return out;
}

bool is_multiplication(const FiniteModule& m, const SubLattice& subs, int f_idx) {
  const int f = f_idx < 0 ? subs.lat.top : f_idx;
  const ElemSet& ambient = subs.at(f);
  for (int h = 0; h < subs.lat.n; ++h) {
    if (!subs.lat.leq(h, f)) continue;
    const AnnIdeal colon = colon_ideal(m, subs.at(h), ambient);
    if (ideal_times_module(m, colon, ambient) != subs.at(h)) return false;
  }
  return true;
}

bool is_comultiplication(const FiniteModule& m, const SubLattice& subs, int f_idx) {
  const int f = f_idx < 0 ? subs.lat.top : f_idx;
  const ElemSet& ambient = subs.at(f);
  for (int h = 0; h < subs.lat.n; ++h) {
    if (!subs.lat.leq(h, f)) continue;
    if (torsion_by(m, annihilator(m, subs.at(h)), ambient) != subs.at(h))
      return false;
  }
  return true;
}

namespace {

// All torsion submodules (0 :_M I) for I running over the coefficient
// ideals: divisors of the exponent over Z, the ideal lattice otherwise.
std::vector<ElemSet> torsion_submodules(const FiniteModule& m) {
  std::vector<ElemSet> out;
  const ElemSet everything = full_set(static_cast<std::size_t>(m.n));
  if (m.over_z()) {
    for (int g : divisors_of(m.exponent())) {
      AnnIdeal ideal;
      ideal.over_z = true;
      ideal.generator = g;
      out.push_back(torsion_by(m, ideal, everything));
    }
    return out;
  }
  const IdealLattice ideals = ideal_lattice(m.ring());
  for (const auto& i : ideals.members) {
    AnnIdeal ideal;
    ideal.over_z = false;
    ideal.members = i;
    out.push_back(torsion_by(m, ideal, everything));
  }
  return out;
}

}  // namespace

TopSpace torsion_subspace_topology(const FiniteModule& m, const SubLattice& subs) {
  const auto firsts = spec_first(m, subs);
  std::vector<std::string> points;
  points.reserve(firsts.size());
  for (int f : firsts) points.push_back(subs.lat.label(f));
  std::vector<ElemSet> closed;
  for (const auto& t : torsion_submodules(m)) {
    ElemSet v(firsts.size());
    for (std::size_t i = 0; i < firsts.size(); ++i)
      if (subs.at(firsts[i]).is_subset_of(t)) v.set(i);
    closed.push_back(std::move(v));
  }
  TopSpace space = make_space(std::move(points), std::move(closed));
  const TopologyCheck check = verify_topology(space);
  if (!check.ok)
    fail(Errc::OracleDisagreement,
         "tau_c family is not a topology: " + check.witness);
  return space;
}

SpectrumContext spec_f_context(const FiniteModule& m, const SubLattice& subs) {
  const auto firsts = spec_first(m, subs);
  if (firsts.empty())
    fail(Errc::Firstless, "module " + m.spec + " has no first submodules");
  ElemSet x(static_cast<std::size_t>(subs.lat.n));
  for (int f : firsts) x.set(static_cast<std::size_t>(f));
  return make_context(dual(subs.lat), std::move(x), true);
}

TopfResult is_topf_module(const FiniteModule& m, const SubLattice& subs) {
  if (spec_first(m, subs).empty()) return {true, true, -1, -1, -1};
  const XTopResult r = is_x_top(spec_f_context(m, subs));
  return {r.value, false, r.witness_a, r.witness_b, -1};
}

TopfResult is_strongly_topf_module(const FiniteModule& m, const SubLattice& subs) {
  const auto firsts = spec_first(m, subs);
  if (firsts.empty()) return {true, true, -1, -1, -1};
  const StronglyXTopResult dual_route = is_strongly_x_top(spec_f_context(m, subs));
  bool all_strongly_hollow = true;
  int witness = -1;
  for (int f : firsts) {
    if (!is_strongly_hollow(subs, f)) {
      all_strongly_hollow = false;
      witness = f;
      break;
    }
  }
  if (dual_route.value != all_strongly_hollow)
    fail(Errc::OracleDisagreement,
         "strongly-topf routes disagree on " + m.spec);
  return {dual_route.value, false, dual_route.witness_a, dual_route.witness_b,
          dual_route.value ? -1 : (dual_route.witness_p >= 0 ? dual_route.witness_p : witness)};
}

bool is_consistent_topf(const FiniteModule& m, const SubLattice& subs,
                        const SampleSpec& sample) {
  if (!is_topf_module(m, subs).value)
    fail(Errc::NotTopf, m.spec + " is not a topf module");
  const auto firsts = spec_first(m, subs);
  if (firsts.empty()) return true;
  const SpectrumContext ctx = spec_f_context(m, subs);
  ElemSet first_set(static_cast<std::size_t>(subs.lat.n));
  for (int f : firsts) first_set.set(static_cast<std::size_t>(f));

  bool by_definition = true;
  bool by_spectra = true;
  bool by_distributivity = true;
  for (const auto& a : subsets_of(ctx.points, sample)) {
    if (!is_irreducible_point_set(ctx, a)) continue;
    const int ia = intersect_point_set(ctx, a);  // the sum of A in Sub(M)
    if (!first_set.test(static_cast<std::size_t>(ia))) by_definition = false;
    for (int h = 0; h < subs.lat.n; ++h) {
      if (h == subs.lat.bottom || !subs.lat.leq(h, ia)) continue;
      bool has_first_below = false;
      for (int f : firsts)
        if (subs.lat.leq(f, h)) {
          has_first_below = true;
          break;
        }
      if (!has_first_below) by_spectra = false;
    }
    if (!is_distributive(subs.lat, downset(subs.lat, ia)))
      by_distributivity = false;
  }
  if (by_definition != by_spectra || by_spectra != by_distributivity)
    fail(Errc::OracleDisagreement,
         "consistency criteria disagree on " + m.spec);
  return by_definition;
}

std::vector<int> maximal_under(const FiniteModule& m, const SubLattice& subs,
                               int h_idx) {
  require_nonzero(subs, h_idx, "maximal-under search");
  const auto firsts = spec_first(m, subs);
  std::vector<int> below;
  for (int f : firsts)
    if (subs.lat.leq(f, h_idx)) below.push_back(f);
  std::vector<int> out;
  for (int f : below) {
    bool maximal = true;
    for (int g : below)
      if (f != g && subs.lat.leq(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool ann_is_prime(const FiniteModule& m, const AnnIdeal& ann) {
  if (ann.over_z) {
    const long g = ann.generator;
    if (g < 2) return false;
    for (long d = 2; d * d <= g; ++d)
      if (g % d == 0) return false;
    return true;
  }
  const FiniteRing& r = m.ring();
  const IdealLattice ideals = ideal_lattice(r);
  const int idx = ideals.index_of(ann.members);
  if (idx < 0) fail(Errc::OracleDisagreement, "annihilator is not an enumerated ideal");
  return prime_spectrum(r, ideals).test(static_cast<std::size_t>(idx));
}

CheckList check_c_ann(const FiniteModule& m, const SubLattice& subs) {
  CheckList out;
  auto& comult = out.add("comultiplication F: first iff simple");
  auto& mult = out.add("multiplication F: first iff ann(F) prime");
  const auto simples = simple_submodules(subs);
  for (int f = 0; f < subs.lat.n; ++f) {
    if (f == subs.lat.bottom) continue;
    const bool first = is_prime_module(m, subs, f);
    if (is_comultiplication(m, subs, f)) {
      ++comult.cases;
      const bool simple = std::find(simples.begin(), simples.end(), f) != simples.end();
      if (first != simple && comult.pass) {
        comult.pass = false;
        comult.witness = subs.lat.label(f);
      }
    }
    if (is_multiplication(m, subs, f)) {
      ++mult.cases;
      if (first != ann_is_prime(m, annihilator(m, subs.at(f))) && mult.pass) {
        mult.pass = false;
        mult.witness = subs.lat.label(f);
      }
    }
  }
  return out;
}

bool simples_isomorphic(const FiniteModule& m, const ElemSet& s1, const ElemSet& s2) {
  if (s1.count() != s2.count()) return false;
  if (m.over_z()) return true;  // simple Z/e-modules of equal order are Z/p
  if (s1 == s2) return true;
  // Generator: any non-zero element of the simple module.
  int gen = -1;
  for (auto x = s1.find_first(); x != ElemSet::npos; x = s1.find_next(x)) {
    if (static_cast<int>(x) != m.zero) {
      gen = static_cast<int>(x);
      break;
    }
  }
  if (gen < 0) return false;
  const int scalars = m.scalar_count();
  for (auto y = s2.find_first(); y != ElemSet::npos; y = s2.find_next(y)) {
    if (static_cast<int>(y) == m.zero) continue;
    // Try phi(r.gen) = r.y; must be well defined, additive and bijective.
    std::map<int, int> image;
    bool ok = true;
    for (int r = 0; r < scalars && ok; ++r) {
      const int from = m.scale(r, gen);
      const int to = m.scale(r, static_cast<int>(y));
      auto it = image.find(from);
      if (it == image.end())
        image[from] = to;
      else
        ok = it->second == to;
    }
    if (!ok || image.size() != s1.count()) continue;
    std::set<int> targets;
    for (const auto& [from, to] : image) targets.insert(to);
    if (targets.size() != s2.count()) continue;
    for (const auto& [x1, y1] : image) {
      for (const auto& [x2, y2] : image) {
        if (image.at(m.plus(x1, x2)) != m.plus(y1, y2)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace spectop
