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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spectop/spectrum.hpp"

using namespace spectop;

namespace {

SpectrumContext chain3_zero_x() {
  // 0 < x < 1 with X = {0, x}.
  FinLattice l = fixtures::chain(3);
  return make_context(l, make_set(3, {0, 1}));
}

}  // namespace

TEST_CASE("context validation") {
  FinLattice m3 = fixtures::m3();
  CHECK_THROWS_WITH_AS(make_context(m3, ElemSet(5)), doctest::Contains("BadX"),
                       Error);
  CHECK_THROWS_WITH_AS(make_context(m3, make_set(5, {4})),
                       doctest::Contains("BadX"), Error);
  CHECK_NOTHROW(make_context(m3, make_set(5, {0})));  // bottom is allowed
}

TEST_CASE("varieties") {
  const SpectrumContext ctx = fixtures::m3_points_abc();
  CHECK(variety(ctx, ctx.lattice.bottom) == ctx.points);
  CHECK(variety(ctx, ctx.lattice.top) == ElemSet(5));
  CHECK(variety(ctx, 1) == make_set(5, {1}));
}

TEST_CASE("point-set intersection") {
  const SpectrumContext ctx = fixtures::m3_points_abc();
  CHECK(intersect_point_set(ctx, ElemSet(5)) == ctx.lattice.top);
  CHECK(intersect_point_set(ctx, make_set(5, {2})) == 2);
  CHECK(intersect_point_set(ctx, make_set(5, {1, 2})) == 0);
}

TEST_CASE("galois laws hold on assorted contexts") {
  for (const SpectrumContext& ctx :
       {fixtures::m3_points_abc(), chain3_zero_x(),
        make_context(fixtures::chain(2), make_set(2, {0})),
        make_context(fixtures::bool4(), make_set(4, {1, 2})),
        make_context(fixtures::z12_divisor_lattice(), make_set(6, {1, 2}))}) {
    const CheckList laws = check_galois_laws(ctx);
    for (const auto& c : laws.checks) {
      INFO(c.name, " ", c.witness);
      CHECK(c.pass);
      CHECK(c.cases > 0);
    }
  }
}

TEST_CASE("closed elements by fixpoint scan match the 2^X oracle") {
  const SpectrumContext m3_ctx = fixtures::m3_points_abc();
  const ClosedElements closed = closed_elements(m3_ctx);
  CHECK(closed.members == m3_ctx.lattice.all());  // {0,a,b,c,1}

  const SpectrumContext chain_ctx = chain3_zero_x();
  CHECK(closed_elements(chain_ctx).members == make_set(3, {0, 1, 2}));
  const SpectrumContext chain_zero =
      make_context(fixtures::chain(3), make_set(3, {0}));
  CHECK(closed_elements(chain_zero).members == make_set(3, {0, 2}));

  for (const SpectrumContext& ctx :
       {fixtures::m3_points_abc(), chain3_zero_x(), chain_zero,
        make_context(fixtures::n5(), make_set(5, {1, 3})),
        make_context(fixtures::z12_divisor_lattice(), make_set(6, {1, 2}))}) {
    const auto expected = oracles::brute_closed_elements(ctx);
    const auto got = members_of(closed_elements(ctx).members);
    CHECK(std::set<int>(got.begin(), got.end()) == expected);
    CHECK(ctx.points.is_subset_of(closed_elements(ctx).members));
  }
}

TEST_CASE("modified join") {
  const SpectrumContext ctx = fixtures::m3_points_abc();
  CHECK(tilde_join(ctx, make_set(5, {2})) == 2);
  CHECK(tilde_join(ctx, make_set(5, {1, 2})) == 4);  // IV(a v b) = I(empty) = 1
  // Empty input unwinds to I(V(bottom)) = I(X).
  CHECK(tilde_join(ctx, ElemSet(5)) == 0);

  const SpectrumContext chain_zero =
      make_context(fixtures::chain(3), make_set(3, {0}));
  CHECK_THROWS_WITH_AS(tilde_join(chain_zero, make_set(3, {1})),
                       doctest::Contains("NotClosedElements"), Error);
}

TEST_CASE("X-top criteria with witnesses") {
  const SpectrumContext m3_ctx = fixtures::m3_points_abc();
  const XTopResult xt = is_x_top(m3_ctx);
  CHECK_FALSE(xt.value);
  // The witness pair's variety union must really escape Im(V).
  const PointSet u = variety(m3_ctx, xt.witness_a) | variety(m3_ctx, xt.witness_b);
  const auto image = variety_image(m3_ctx);
  CHECK_FALSE(std::binary_search(image.begin(), image.end(), u));
  CHECK_FALSE(is_x_top_via_c(m3_ctx));
  CHECK_FALSE(is_x_top_via_d(m3_ctx));

  for (int size : {2, 3, 4, 5}) {
    const FinLattice c = fixtures::chain(size);
    ElemSet x = c.all();
    x.reset(static_cast<std::size_t>(c.top));
    const SpectrumContext ctx = make_context(c, x);
    CHECK(is_x_top(ctx).value);
    CHECK(is_x_top_via_c(ctx));
    CHECK(is_x_top_via_d(ctx));
  }

  // Zariski over Z/12: X the prime ideals (2), (3).
  const SpectrumContext z12 =
      make_context(fixtures::z12_divisor_lattice(), make_set(6, {1, 2}));
  CHECK(is_x_top(z12).value);
  CHECK(is_x_top_via_c(z12));
  CHECK(is_x_top_via_d(z12));
  CHECK(is_strongly_x_top(z12).value);
}

TEST_CASE("strong X-top-ness and its anti-homomorphism oracle") {
  // Left-ideal lattice of M2(F2) is the diamond; X = {0}.
  const SpectrumContext left =
      make_context(fixtures::m3(), make_set(5, {0}));
  CHECK(is_x_top(left).value);
  const StronglyXTopResult sx = is_strongly_x_top(left);
  CHECK_FALSE(sx.value);
  CHECK(sx.witness_p == 0);
  // The witness is a genuine failure of Equation (1).
  const FinLattice& l = left.lattice;
  CHECK(l.leq(l.meet(sx.witness_a, sx.witness_b), sx.witness_p));
  CHECK_FALSE(l.leq(sx.witness_a, sx.witness_p));
  CHECK_FALSE(l.leq(sx.witness_b, sx.witness_p));

  CHECK(is_strongly_x_top(chain3_zero_x()).value);
}

TEST_CASE("building the variety topology") {
  const SpectrumContext c2 = make_context(fixtures::chain(2), make_set(2, {0}));
  const TopSpace single = build_topology(c2);
  CHECK(single.points == std::vector<std::string>{"c0"});
  CHECK(single.closed.size() == 2);

  const TopSpace nested = build_topology(chain3_zero_x());
  CHECK(nested.points.size() == 2);
  CHECK(nested.closed.size() == 3);  // {}, {x}, {0,x}

  const SpectrumContext z12 =
      make_context(fixtures::z12_divisor_lattice(), make_set(6, {1, 2}));
  const TopSpace zariski = build_topology(z12);
  CHECK(zariski.closed.size() == 4);  // discrete on two points
  CHECK(is_discrete(zariski));

  CHECK_THROWS_WITH_AS(build_topology(fixtures::m3_points_abc()),
                       doctest::Contains("NotXTop"), Error);
}

TEST_CASE("irreducible point sets") {
  const SpectrumContext z12 =
      make_context(fixtures::z12_divisor_lattice(), make_set(6, {1, 2}));
  CHECK(is_irreducible_point_set(z12, make_set(6, {1})));
  CHECK_FALSE(is_irreducible_point_set(z12, make_set(6, {1, 2})));
  CHECK_THROWS_WITH_AS(is_irreducible_point_set(z12, ElemSet(6)),
                       doctest::Contains("EmptySet"), Error);
  CHECK_THROWS_WITH_AS(
      is_irreducible_point_set(fixtures::m3_points_abc(), make_set(5, {1})),
      doctest::Contains("NotXTop"), Error);

  // Simple-ring shape: X = {0} in the diamond. X itself is irreducible as a
  // singleton even though I(X) = 0 is not irreducible in the lattice; the
  // strongly-X-top hypothesis of the correspondence cannot be dropped.
  const SpectrumContext left = make_context(fixtures::m3(), make_set(5, {0}));
  CHECK(is_irreducible_point_set(left, make_set(5, {0})));
  CHECK_FALSE(is_irreducible(left.lattice, left.lattice.all(), 0));
}

TEST_CASE("irreducibility correspondence report") {
  for (int size : {2, 3, 4, 5}) {
    const FinLattice c = fixtures::chain(size);
    ElemSet x = c.all();
    x.reset(static_cast<std::size_t>(c.top));
    const CheckList report =
        check_irreducible_correspondence(make_context(c, x));
    for (const auto& chk : report.checks) {
      INFO(chk.name, " ", chk.witness);
      CHECK(chk.pass);
    }
  }
  const SpectrumContext z12 =
      make_context(fixtures::z12_divisor_lattice(), make_set(6, {1, 2}));
  CHECK(check_irreducible_correspondence(z12).all_pass());
}
