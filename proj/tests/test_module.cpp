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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "spectop/module.hpp"

using namespace spectop;

namespace {

struct Loaded {
  FiniteModule m;
  SubLattice subs;
};

Loaded load(const std::string& spec) {
  Loaded out;
  out.m = parse_module_spec(spec);
  out.subs = enumerate_submodules(out.m);
  return out;
}

int submodule_of_order(const Loaded& l, std::size_t order) {
  for (int i = 0; i < l.subs.lat.n; ++i)
    if (l.subs.at(i).count() == order) return i;
  return -1;
}

}  // namespace

TEST_CASE("module spec parsing") {
  const FiniteModule m = parse_module_spec("Z: 2,3,5");
  CHECK(m.n == 30);
  CHECK(m.exponent() == 30);
  CHECK(parse_module_spec("Z: 4").n == 4);
  CHECK_THROWS_WITH_AS(parse_module_spec("Z: 1,2"), doctest::Contains("BadSpec"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_module_spec("Z: 600"), doctest::Contains("TooLarge"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_module_spec("nonsense"),
                       doctest::Contains("BadSpec"), Error);
  CHECK(parse_module_spec("ring M2F2: regular").n == 16);
  CHECK(parse_module_spec("ring M2F2: column").n == 4);
  CHECK(parse_module_spec("ring Zmod:12: regular").n == 12);
  CHECK_THROWS_WITH_AS(parse_module_spec("ring M2F2: sideways"),
                       doctest::Contains("BadSpec"), Error);
}

TEST_CASE("submodule enumeration matches the brute-force oracle") {
  CHECK(load("Z: 2,2").subs.lat.n == 5);
  CHECK(load("Z: 4").subs.lat.n == 3);
  CHECK(load("Z: 2,3").subs.lat.n == 4);

  for (const std::string spec :
       {"Z: 2,2", "Z: 4", "Z: 2,3", "Z: 8", "Z: 2,2,2", "Z: 4,2", "Z: 12",
        "ring M2F2: regular", "ring M2F2: column"}) {
    const Loaded l = load(spec);
    REQUIRE(l.m.n <= 16);
    const auto expected = oracles::brute_submodules(l.m);
    const std::set<ElemSet> got(l.subs.members.begin(), l.subs.members.end());
    INFO(spec);
    CHECK(got == expected);
  }
}

TEST_CASE("submodule lattice has intersection-meet and sum-join") {
  const Loaded l = load("Z: 2,2");
  for (int a = 0; a < l.subs.lat.n; ++a)
    for (int b = 0; b < l.subs.lat.n; ++b) {
      CHECK(l.subs.at(l.subs.lat.meet(a, b)) == (l.subs.at(a) & l.subs.at(b)));
      CHECK(l.subs.at(l.subs.lat.join(a, b)) ==
            span(l.m, l.subs.at(a) | l.subs.at(b)));
    }
}

TEST_CASE("annihilators") {
  const Loaded l83 = load("Z: 8,3");
  // The Z/8 summand is generated by (1,0), the first non-zero element in
  // mixed-radix order; it has 8 elements.
  const int z8 = submodule_of_order(l83, 8);
  REQUIRE(z8 >= 0);
  CHECK(is_uniserial(l83.subs, z8));
  CHECK(annihilator(l83.m, l83.subs.at(z8)).generator == 8);
  CHECK(annihilator(l83.m, l83.subs.at(l83.subs.lat.bottom)).generator == 1);

  const Loaded l23 = load("Z: 2,3");
  CHECK(annihilator(l23.m, l23.subs.at(l23.subs.lat.top)).generator == 6);
}

TEST_CASE("prime-module test") {
  const Loaded l22 = load("Z: 2,2");
  CHECK(is_prime_module(l22.m, l22.subs, l22.subs.lat.top));
  const Loaded l4 = load("Z: 4");
  CHECK_FALSE(is_prime_module(l4.m, l4.subs, l4.subs.lat.top));
  for (int s : simple_submodules(l4.subs)) CHECK(is_prime_module(l4.m, l4.subs, s));
  CHECK_THROWS_WITH_AS(is_prime_module(l4.m, l4.subs, l4.subs.lat.bottom),
                       doctest::Contains("ZeroSubmodule"), Error);
}

TEST_CASE("first-submodule spectra") {
  const Loaded l235 = load("Z: 2,3,5");
  const auto firsts = spec_first(l235.m, l235.subs);
  CHECK(firsts.size() == 3);
  std::multiset<std::size_t> orders;
  for (int f : firsts) orders.insert(l235.subs.at(f).count());
  CHECK(orders == std::multiset<std::size_t>{2, 3, 5});
  CHECK(firsts == simple_submodules(l235.subs));

  const Loaded l4 = load("Z: 4");
  const auto f4 = spec_first(l4.m, l4.subs);
  REQUIRE(f4.size() == 1);
  CHECK(l4.subs.at(f4[0]).count() == 2);

  const Loaded l22 = load("Z: 2,2");
  CHECK(spec_first(l22.m, l22.subs).size() == 4);  // every non-zero submodule
}

TEST_CASE("socle and coradical") {
  const Loaded l4 = load("Z: 4");
  CHECK(l4.subs.at(socle(l4.subs)).count() == 2);
  CHECK(l4.subs.at(coradical_f(l4.m, l4.subs)).count() == 2);

  const Loaded l23 = load("Z: 2,3");
  CHECK(socle(l23.subs) == l23.subs.lat.top);
  CHECK(simple_submodules(l23.subs).size() == 2);

  const Loaded l22 = load("Z: 2,2");
  CHECK(socle(l22.subs) == l22.subs.lat.top);
  CHECK(simple_submodules(l22.subs).size() == 3);

  const Loaded l83 = load("Z: 8,3");
  CHECK(l83.subs.at(coradical_f(l83.m, l83.subs)).count() == 6);
  CHECK(socle(l83.subs) == coradical_f(l83.m, l83.subs));
}

TEST_CASE("hollow submodules") {
  const Loaded l4 = load("Z: 4");
  const int z2 = submodule_of_order(l4, 2);
  CHECK(is_strongly_hollow(l4.subs, z2));
  CHECK(is_hollow(l4.subs, z2));

  const Loaded l22 = load("Z: 2,2");
  for (int s : simple_submodules(l22.subs)) {
    CHECK(is_hollow(l22.subs, s));            // simple modules are hollow
    CHECK_FALSE(is_strongly_hollow(l22.subs, s));  // line inside sum of others
  }

  const Loaded l2 = load("Z: 2");
  CHECK(is_strongly_hollow(l2.subs, l2.subs.lat.top));
  CHECK_THROWS_WITH_AS(is_hollow(l22.subs, l22.subs.lat.bottom),
                       doctest::Contains("ZeroSubmodule"), Error);
}

TEST_CASE("uniserial, uniform, essential socle, colocal") {
  const Loaded l4 = load("Z: 4");
  CHECK(is_uniserial(l4.subs, l4.subs.lat.top));
  CHECK(is_uniform(l4.subs));
  CHECK(has_essential_socle(l4.subs));
  CHECK(is_colocal(l4.subs));

  const Loaded l23 = load("Z: 2,3");
  CHECK_FALSE(is_uniform(l23.subs));
  CHECK(has_essential_socle(l23.subs));
  CHECK_FALSE(is_colocal(l23.subs));

  const Loaded l22 = load("Z: 2,2");
  CHECK_FALSE(is_uniform(l22.subs));
  CHECK_FALSE(is_uniserial(l22.subs, l22.subs.lat.top));
}

TEST_CASE("min-property") {
  const Loaded l235 = load("Z: 2,3,5");
  CHECK(has_min_property(l235.m, l235.subs));
  const Loaded l22 = load("Z: 2,2");
  CHECK_FALSE(has_min_property(l22.m, l22.subs));
  const Loaded l2 = load("Z: 2");
  CHECK(has_min_property(l2.m, l2.subs));
}

TEST_CASE("multiplication and comultiplication") {
  const Loaded l4 = load("Z: 4");
  CHECK(is_multiplication(l4.m, l4.subs));
  CHECK(is_comultiplication(l4.m, l4.subs));

  const Loaded l22 = load("Z: 2,2");
  CHECK_FALSE(is_multiplication(l22.m, l22.subs));
  CHECK_FALSE(is_comultiplication(l22.m, l22.subs));
  // The failing witness from the worked example: (H : M) = 2Z and 2M = 0.
  const int line = simple_submodules(l22.subs).front();
  const AnnIdeal colon =
      colon_ideal(l22.m, l22.subs.at(line), l22.subs.at(l22.subs.lat.top));
  CHECK(colon.generator == 2);
  CHECK(ideal_times_module(l22.m, colon, l22.subs.at(l22.subs.lat.top)) ==
        l22.subs.at(l22.subs.lat.bottom));

  const Loaded l23 = load("Z: 2,3");
  CHECK(is_multiplication(l23.m, l23.subs));
  CHECK(is_comultiplication(l23.m, l23.subs));
}

TEST_CASE("torsion subspace topology") {
  const Loaded l22 = load("Z: 2,2");
  const TopSpace t22 = torsion_subspace_topology(l22.m, l22.subs);
  CHECK(t22.points.size() == 4);
  CHECK(t22.closed.size() == 2);  // empty and everything
  CHECK(verify_topology(t22).ok);

  const Loaded l235 = load("Z: 2,3,5");
  const TopSpace t235 = torsion_subspace_topology(l235.m, l235.subs);
  CHECK(t235.points.size() == 3);
  CHECK(is_discrete(t235));

  const Loaded l4 = load("Z: 4");
  const TopSpace t4 = torsion_subspace_topology(l4.m, l4.subs);
  CHECK(t4.points.size() == 1);
  CHECK(verify_topology(t4).ok);
}

TEST_CASE("spectrum context over the dual lattice") {
  const Loaded l23 = load("Z: 2,3");
  const SpectrumContext ctx = spec_f_context(l23.m, l23.subs);
  CHECK(ctx.from_dual);
  CHECK(ctx.points.count() == 2);
  // V(M) collects every first inside M; V(0) is empty.
  CHECK(variety(ctx, l23.subs.lat.top) == ctx.points);
  CHECK(variety(ctx, l23.subs.lat.bottom).none());
  const int z2 = submodule_of_order(l23, 2);
  CHECK(variety(ctx, z2) == make_set(static_cast<std::size_t>(l23.subs.lat.n),
                                     {static_cast<std::size_t>(z2)}));
  // I of the whole spectrum is the coradical, the sum M.
  CHECK(intersect_point_set(ctx, ctx.points) == l23.subs.lat.top);
}

TEST_CASE("topf classification") {
  const Loaded l235 = load("Z: 2,3,5");
  CHECK(is_topf_module(l235.m, l235.subs).value);
  CHECK_FALSE(is_topf_module(l235.m, l235.subs).firstless);

  const Loaded l22 = load("Z: 2,2");
  const TopfResult not_topf = is_topf_module(l22.m, l22.subs);
  CHECK_FALSE(not_topf.value);
  CHECK(not_topf.witness_a >= 0);

  const Loaded l4 = load("Z: 4");
  CHECK(is_strongly_topf_module(l4.m, l4.subs).value);
  CHECK(is_topf_module(l4.m, l4.subs).value);

  const Loaded m2 = load("ring M2F2: regular");
  CHECK_FALSE(is_topf_module(m2.m, m2.subs).value);
  CHECK(spec_first(m2.m, m2.subs).size() == 4);  // simple ring: all non-zero
}

TEST_CASE("consistency") {
  const Loaded l235 = load("Z: 2,3,5");
  CHECK(is_consistent_topf(l235.m, l235.subs));
  const Loaded l4 = load("Z: 4");
  CHECK(is_consistent_topf(l4.m, l4.subs));
  const Loaded l22 = load("Z: 2,2");
  CHECK_THROWS_WITH_AS(is_consistent_topf(l22.m, l22.subs),
                       doctest::Contains("NotTopf"), Error);
}

TEST_CASE("maximal firsts under a submodule") {
  const Loaded l4 = load("Z: 4");
  const auto m4 = maximal_under(l4.m, l4.subs, l4.subs.lat.top);
  REQUIRE(m4.size() == 1);
  CHECK(l4.subs.at(m4[0]).count() == 2);

  const Loaded l23 = load("Z: 2,3");
  CHECK(maximal_under(l23.m, l23.subs, l23.subs.lat.top).size() == 2);
  const int z2 = submodule_of_order(l23, 2);
  CHECK(maximal_under(l23.m, l23.subs, z2) == std::vector<int>{z2});
  CHECK_THROWS_WITH_AS(maximal_under(l23.m, l23.subs, l23.subs.lat.bottom),
                       doctest::Contains("ZeroSubmodule"), Error);
}

TEST_CASE("c-ann criteria hold on the worked examples") {
  for (const std::string spec : {"Z: 4", "Z: 2,2", "Z: 2,3", "Z: 8,3",
                                 "ring Zmod:12: regular", "ring M2F2: column"}) {
    const Loaded l = load(spec);
    const CheckList checks = check_c_ann(l.m, l.subs);
    INFO(spec);
    CHECK(checks.all_pass());
  }
}

TEST_CASE("simple-module isomorphism") {
  const Loaded l22 = load("Z: 2,2");
  const auto lines = simple_submodules(l22.subs);
  CHECK(simples_isomorphic(l22.m, l22.subs.at(lines[0]), l22.subs.at(lines[1])));

  const Loaded l23 = load("Z: 2,3");
  const auto simples23 = simple_submodules(l23.subs);
  CHECK_FALSE(
      simples_isomorphic(l23.m, l23.subs.at(simples23[0]), l23.subs.at(simples23[1])));

  // Minimal left ideals of M2(F2) are pairwise isomorphic (ring path).
  const Loaded m2 = load("ring M2F2: regular");
  const auto mins = simple_submodules(m2.subs);
  REQUIRE(mins.size() == 3);
  CHECK(simples_isomorphic(m2.m, m2.subs.at(mins[0]), m2.subs.at(mins[1])));
  CHECK(simples_isomorphic(m2.m, m2.subs.at(mins[1]), m2.subs.at(mins[2])));
}

TEST_CASE("zmod regular module spectra") {
  const Loaded z12 = load("ring Zmod:12: regular");
  CHECK(z12.subs.lat.n == 6);
  const auto firsts = spec_first(z12.m, z12.subs);
  CHECK(firsts == simple_submodules(z12.subs));
  CHECK(firsts.size() == 2);
  CHECK(is_topf_module(z12.m, z12.subs).value);
}
