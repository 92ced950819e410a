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

#include "spectop/ring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spectop/errors.hpp"

namespace spectop {

namespace {

// Additive subgroup generated by `seed`, optionally closed under left and/or
// right multiplication by arbitrary ring elements.
ElemSet closure_in_ring(const FiniteRing& r, ElemSet seed, bool left, bool right) {
  seed.set(static_cast<std::size_t>(r.zero));
  std::vector<int> queue = members_of(seed);
  ElemSet out = seed;
  auto push = [&](int x) {
    if (!out.test(static_cast<std::size_t>(x))) {
      out.set(static_cast<std::size_t>(x));
      queue.push_back(x);
    }
  };
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    push(r.neg[static_cast<std::size_t>(x)]);
    for (auto y = out.find_first(); y != ElemSet::npos; y = out.find_next(y))
      push(r.plus(x, static_cast<int>(y)));
    if (left)
      for (int s = 0; s < r.n; ++s) push(r.times(s, x));
    if (right)
      for (int s = 0; s < r.n; ++s) push(r.times(x, s));
  }
  return out;
}

IdealLattice enumerate_ideals(const FiniteRing& r, bool left, bool right) {
  std::set<ElemSet> found;
  std::vector<ElemSet> worklist;
  ElemSet zero_only(static_cast<std::size_t>(r.n));
  zero_only.set(static_cast<std::size_t>(r.zero));
  found.insert(zero_only);
  worklist.push_back(zero_only);
  while (!worklist.empty()) {
    const ElemSet current = worklist.back();
    worklist.pop_back();
    for (int x = 0; x < r.n; ++x) {
      if (current.test(static_cast<std::size_t>(x))) continue;
      ElemSet seed = current;
      seed.set(static_cast<std::size_t>(x));
      ElemSet bigger = closure_in_ring(r, std::move(seed), left, right);
      if (found.insert(bigger).second) worklist.push_back(bigger);
    }
  }

  IdealLattice out;
  out.members.assign(found.begin(), found.end());
  std::vector<std::string> labels;
  labels.reserve(out.members.size());
  for (const auto& m : out.members) {
    if (m.count() == 1) {
      labels.push_back("(0)");
      continue;
    }
    // Greedy minimal generating set, smallest element indices first.
    ElemSet span(static_cast<std::size_t>(r.n));
    span.set(static_cast<std::size_t>(r.zero));
    std::string gens;
    while (span != m) {
      const int g = static_cast<int>((m - span).find_first());
      ElemSet seed = span;
      seed.set(static_cast<std::size_t>(g));
      span = closure_in_ring(r, std::move(seed), left, right);
      if (!gens.empty()) gens += ",";
      gens += r.labels[static_cast<std::size_t>(g)];
    }
    labels.push_back("(" + gens + ")");
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = 0; j < out.members.size(); ++j)
      if (out.members[i].is_subset_of(out.members[j]))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  out.lat = build_lattice(labels, pairs);
  return out;
}

}  // namespace

FiniteRing make_ring(std::string name, std::vector<std::string> labels,
                     std::vector<int> add, std::vector<int> mul, int cap) {
  FiniteRing r;
  r.n = static_cast<int>(labels.size());
  if (r.n == 0) fail(Errc::BadInput, "ring needs at least one element");
  if (r.n > cap)
    fail(Errc::TooLarge, "ring has " + std::to_string(r.n) +
                             " elements, cap is " + std::to_string(cap));
  r.name = std::move(name);
  r.labels = std::move(labels);
  r.add = std::move(add);
  r.mul = std::move(mul);

  // Locate the neutral elements first, then verify every axiom.
  r.zero = -1;
  for (int z = 0; z < r.n && r.zero < 0; ++z) {
    bool ok = true;
    for (int x = 0; x < r.n; ++x) ok = ok && r.plus(z, x) == x && r.plus(x, z) == x;
    if (ok) r.zero = z;
  }
  if (r.zero < 0) fail(Errc::BadInput, "ring has no additive identity");
  r.one = -1;
  for (int e = 0; e < r.n && r.one < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < r.n; ++x) ok = ok && r.times(e, x) == x && r.times(x, e) == x;
    if (ok) r.one = e;
  }
  if (r.one < 0) fail(Errc::BadInput, "ring has no multiplicative identity");

  r.neg.assign(static_cast<std::size_t>(r.n), -1);
  for (int x = 0; x < r.n; ++x) {
    for (int y = 0; y < r.n; ++y) {
      if (r.plus(x, y) == r.zero) {
        r.neg[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (r.neg[static_cast<std::size_t>(x)] < 0)
      fail(Errc::BadInput, "element " + r.labels[static_cast<std::size_t>(x)] +
                               " has no additive inverse");
  }

  r.commutative = true;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      if (r.plus(x, y) != r.plus(y, x))
        fail(Errc::BadInput, "addition is not commutative");
      if (r.times(x, y) != r.times(y, x)) r.commutative = false;
    }
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      for (int z = 0; z < r.n; ++z) {
        if (r.plus(r.plus(x, y), z) != r.plus(x, r.plus(y, z)))
          fail(Errc::BadInput, "addition is not associative");
        if (r.times(r.times(x, y), z) != r.times(x, r.times(y, z)))
          fail(Errc::BadInput, "multiplication is not associative");
        if (r.times(x, r.plus(y, z)) != r.plus(r.times(x, y), r.times(x, z)) ||
            r.times(r.plus(x, y), z) != r.plus(r.times(x, z), r.times(y, z)))
          fail(Errc::BadInput, "distributivity fails");
      }
  return r;
}

FiniteRing zmod_ring(int n, int cap) {
  if (n < 1) fail(Errc::BadSpec, "Zmod modulus must be positive");
  if (n > cap) fail(Errc::TooLarge, "Zmod modulus exceeds cap");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<int> add(static_cast<std::size_t>(n) * n);
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
      mul[static_cast<std::size_t>(x) * n + y] = (x * y) % n;
    }
  return make_ring("Zmod:" + std::to_string(n), std::move(labels),
                   std::move(add), std::move(mul), cap);
}

namespace {

// Field tables for F_q, q in {2,3,4}. F_4 uses {0,1,w,w+1} with w^2 = w+1.
struct SmallField {
  int q;
  int add(int a, int b) const {
    if (q == 4) return a ^ b;
    return (a + b) % q;
  }
  int mul(int a, int b) const {
    if (q != 4) return (a * b) % q;
    if (a == 0 || b == 0) return 0;
    static constexpr int table[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    return table[a - 1][b - 1];
  }
};

}  // namespace

FiniteRing matrix_ring(int q, int n) {
  if (n != 2) fail(Errc::TooLarge, "only 2x2 matrix rings are supported");
  if (q != 2 && q != 3 && q != 4)
    fail(Errc::TooLarge, "matrix ring field size must be 2, 3 or 4");
  const SmallField f{q};
  const int count = q * q * q * q;
  auto entry = [&](int code, int pos) {  // pos 0..3 = a,b,c,d of [[a,b],[c,d]]
    for (int i = 0; i < pos; ++i) code /= q;
    return code % q;
  };
  auto encode = [&](int a, int b, int c, int d) {
    return ((d * q + c) * q + b) * q + a;
  };
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    labels.push_back("[" + std::to_string(entry(m, 0)) + std::to_string(entry(m, 1)) +
                     ";" + std::to_string(entry(m, 2)) + std::to_string(entry(m, 3)) + "]");
  }
  std::vector<int> add(static_cast<std::size_t>(count) * count);
  std::vector<int> mul(static_cast<std::size_t>(count) * count);
  for (int x = 0; x < count; ++x) {
    const int xa = entry(x, 0), xb = entry(x, 1), xc = entry(x, 2), xd = entry(x, 3);
    for (int y = 0; y < count; ++y) {
      const int ya = entry(y, 0), yb = entry(y, 1), yc = entry(y, 2), yd = entry(y, 3);
      add[static_cast<std::size_t>(x) * count + y] =
          encode(f.add(xa, ya), f.add(xb, yb), f.add(xc, yc), f.add(xd, yd));
      mul[static_cast<std::size_t>(x) * count + y] =
          encode(f.add(f.mul(xa, ya), f.mul(xb, yc)),
                 f.add(f.mul(xa, yb), f.mul(xb, yd)),
                 f.add(f.mul(xc, ya), f.mul(xd, yc)),
                 f.add(f.mul(xc, yb), f.mul(xd, yd)));
    }
  }
  return make_ring("M2F" + std::to_string(q), std::move(labels), std::move(add),
                   std::move(mul), count);
}

int IdealLattice::index_of(const ElemSet& s) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == s) return static_cast<int>(i);
  return -1;
}

IdealLattice ideal_lattice(const FiniteRing& r) {
  return enumerate_ideals(r, true, true);
}

IdealLattice left_ideal_lattice(const FiniteRing& r) {
  return enumerate_ideals(r, true, false);
}

ElemSet ideal_product(const FiniteRing& r, const ElemSet& a, const ElemSet& b) {
  ElemSet seed(static_cast<std::size_t>(r.n));
  for_each_member(a, [&](int x) {
    for_each_member(b, [&](int y) { seed.set(static_cast<std::size_t>(r.times(x, y))); });
  });
  return closure_in_ring(r, std::move(seed), false, false);
}

bool is_two_sided_ideal(const FiniteRing& r, const ElemSet& s) {
  if (!s.test(static_cast<std::size_t>(r.zero))) return false;
  bool ok = true;
  for_each_member(s, [&](int x) {
    for_each_member(s, [&](int y) {
      ok = ok && s.test(static_cast<std::size_t>(r.plus(x, y)));
    });
    for (int t = 0; t < r.n; ++t)
      ok = ok && s.test(static_cast<std::size_t>(r.times(t, x))) &&
           s.test(static_cast<std::size_t>(r.times(x, t)));
  });
  return ok;
}

ElemSet prime_spectrum(const FiniteRing& r, const IdealLattice& ideals) {
  const std::size_t k = ideals.members.size();
  ElemSet primes(k);
  const int whole = ideals.lat.top;
  for (std::size_t p = 0; p < k; ++p) {
    if (static_cast<int>(p) == whole) continue;  // prime ideals are proper
    bool prime = true;
    for (std::size_t a = 0; a < k && prime; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!ideal_product(r, ideals.members[a], ideals.members[b])
                 .is_subset_of(ideals.members[p]))
          continue;
        if (!ideals.lat.leq(static_cast<int>(a), static_cast<int>(p)) &&
            !ideals.lat.leq(static_cast<int>(b), static_cast<int>(p))) {
          prime = false;
          break;
        }
      }
    }
    if (prime) primes.set(p);
  }
  return primes;
}

}  // namespace spectop
