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

#include <doctest.h>

#include <set>

#include "spectop/ring.hpp"

using namespace spectop;

TEST_CASE("Z/12 ring and its ideals") {
  const FiniteRing r = zmod_ring(12);
  CHECK(r.commutative);
  CHECK(r.one == 1);
  CHECK(r.zero == 0);

  const IdealLattice ideals = ideal_lattice(r);
  CHECK(ideals.lat.n == 6);  // divisors of 12
  std::set<std::size_t> sizes;
  for (const auto& m : ideals.members) sizes.insert(m.count());
  CHECK(sizes == std::set<std::size_t>{1, 2, 3, 4, 6, 12});

  const ElemSet primes = prime_spectrum(r, ideals);
  CHECK(primes.count() == 2);
  std::set<std::size_t> prime_sizes;
  for_each_member(primes, [&](int p) {
    prime_sizes.insert(ideals.members[static_cast<std::size_t>(p)].count());
  });
  // (2) has 6 elements, (3) has 4.
  CHECK(prime_sizes == std::set<std::size_t>{4, 6});
}

TEST_CASE("ideal products in Z/12") {
  const FiniteRing r = zmod_ring(12);
  const IdealLattice ideals = ideal_lattice(r);
  int two = -1, three = -1, six = -1;
  for (int i = 0; i < ideals.lat.n; ++i) {
    if (ideals.members[static_cast<std::size_t>(i)].count() == 6) two = i;
    if (ideals.members[static_cast<std::size_t>(i)].count() == 4) three = i;
    if (ideals.members[static_cast<std::size_t>(i)].count() == 2) six = i;
  }
  REQUIRE(two >= 0);
  REQUIRE(three >= 0);
  REQUIRE(six >= 0);
  CHECK(ideal_product(r, ideals.members[static_cast<std::size_t>(two)],
                      ideals.members[static_cast<std::size_t>(three)]) ==
        ideals.members[static_cast<std::size_t>(six)]);
}

TEST_CASE("matrix ring over F2") {
  const FiniteRing r = matrix_ring(2);
  CHECK(r.n == 16);
  CHECK_FALSE(r.commutative);
  CHECK(r.labels[static_cast<std::size_t>(r.one)] == "[10;01]");

  const IdealLattice two_sided = ideal_lattice(r);
  CHECK(two_sided.lat.n == 2);  // simple ring
  const ElemSet primes = prime_spectrum(r, two_sided);
  CHECK(primes.count() == 1);
  CHECK(primes.test(static_cast<std::size_t>(two_sided.lat.bottom)));

  // Left ideals form the subspace lattice of F2^2: the diamond.
  const IdealLattice left = left_ideal_lattice(r);
  CHECK(left.lat.n == 5);
  int atoms = 0;
  for (int i = 0; i < left.lat.n; ++i)
    if (downset(left.lat, i).count() == 2) ++atoms;
  CHECK(atoms == 3);
}

TEST_CASE("matrix ring over F3 and the caps") {
  CHECK(matrix_ring(3).n == 81);
  CHECK_THROWS_WITH_AS(matrix_ring(5), doctest::Contains("TooLarge"), Error);
  CHECK_THROWS_WITH_AS(matrix_ring(2, 3), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("fields have a single prime") {
  const FiniteRing f2 = zmod_ring(2);
  const IdealLattice ideals = ideal_lattice(f2);
  CHECK(ideals.lat.n == 2);
  CHECK(prime_spectrum(f2, ideals).count() == 1);
}

TEST_CASE("two-sided ideal membership test") {
  const FiniteRing r = matrix_ring(2);
  CHECK(is_two_sided_ideal(r, full_set(16)));
  ElemSet zero_only(16);
  zero_only.set(static_cast<std::size_t>(r.zero));
  CHECK(is_two_sided_ideal(r, zero_only));
  // A single minimal left ideal is not two-sided in a simple ring.
  const IdealLattice left = left_ideal_lattice(r);
  for (int i = 0; i < left.lat.n; ++i)
    if (downset(left.lat, i).count() == 2)
      CHECK_FALSE(is_two_sided_ideal(r, left.members[static_cast<std::size_t>(i)]));
}
