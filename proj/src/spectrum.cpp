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

#include "spectop/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "spectop/errors.hpp"

namespace spectop {

namespace {

std::string set_text(const FinLattice& l, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](int x) {
    if (!first) out += ",";
    out += l.label(x);
    first = false;
  });
  return out + "}";
}

}  // namespace

std::vector<std::string> SpectrumContext::point_labels() const {
  std::vector<std::string> out;
  for_each_member(points, [&](int p) { out.push_back(lattice.label(p)); });
  return out;
}

SpectrumContext make_context(FinLattice lattice, ElemSet x, bool from_dual) {
  if (x.size() != static_cast<std::size_t>(lattice.n))
    fail(Errc::BadInput, "point set size does not match the lattice");
  if (x.none()) fail(Errc::BadX, "X must be non-empty");
  if (x.test(static_cast<std::size_t>(lattice.top)))
    fail(Errc::BadX, "X must not contain the top element");
  SpectrumContext ctx;
  ctx.lattice = std::move(lattice);
  ctx.points = std::move(x);
  ctx.from_dual = from_dual;
  return ctx;
}

PointSet variety(const SpectrumContext& ctx, int a) {
  return upset(ctx.lattice, a) & ctx.points;
}

int intersect_point_set(const SpectrumContext& ctx, const PointSet& a) {
  return meet_all(ctx.lattice, a);
}

std::vector<PointSet> variety_image(const SpectrumContext& ctx) {
  std::vector<PointSet> image;
  image.reserve(static_cast<std::size_t>(ctx.lattice.n));
  for (int a = 0; a < ctx.lattice.n; ++a) image.push_back(variety(ctx, a));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

namespace {

std::string mask_text(const FinLattice& l, const std::vector<int>& pts,
                      std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(mask & (1ull << i))) continue;
    if (!first) out += ",";
    out += l.label(pts[i]);
    first = false;
  }
  return out + "}";
}

}  // namespace

CheckList check_galois_laws(const SpectrumContext& ctx, const SampleSpec& sample) {
  CheckList out;
  const FinLattice& l = ctx.lattice;
  const auto pts = members_of(ctx.points);
  const int k = static_cast<int>(pts.size());

  // Point sets as k-bit masks; exhaustive when k is small, the deterministic
  // subset sample otherwise.
  std::vector<std::uint64_t> masks;
  if (k <= sample.cap && k <= 30) {
    masks.resize(1ull << k);
    for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
  } else {
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[pts[static_cast<std::size_t>(i)]] = i;
    masks.push_back(0);
    for (const auto& s : subsets_of(ctx.points, sample)) {
      std::uint64_t m = 0;
      for_each_member(s, [&](int p) { m |= 1ull << pos.at(p); });
      masks.push_back(m);
    }
  }

  // V as a mask per lattice element, I as a fold per mask.
  std::vector<std::uint64_t> v_mask(static_cast<std::size_t>(l.n), 0);
  for (int a = 0; a < l.n; ++a)
    for (int i = 0; i < k; ++i)
      if (l.leq(a, pts[static_cast<std::size_t>(i)])) v_mask[static_cast<std::size_t>(a)] |= 1ull << i;
  auto intersect_mask = [&](std::uint64_t m) {
    int acc = l.top;
    while (m) {
      const int i = std::countr_zero(m);
      m &= m - 1;
      acc = l.meet(acc, pts[static_cast<std::size_t>(i)]);
    }
    return acc;
  };

  auto& unit_a = out.add("a <= I(V(a))");
  auto& viv = out.add("V(I(V(a))) = V(a)");
  for (int a = 0; a < l.n; ++a) {
    ++unit_a.cases;
    const int iva = intersect_mask(v_mask[static_cast<std::size_t>(a)]);
    if (!l.leq(a, iva) && unit_a.pass) {
      unit_a.pass = false;
      unit_a.witness = l.label(a) + " not below I(V(a)) = " + l.label(iva);
    }
    ++viv.cases;
    if (v_mask[static_cast<std::size_t>(iva)] != v_mask[static_cast<std::size_t>(a)] && viv.pass) {
      viv.pass = false;
      viv.witness = "V∘I∘V differs from V at " + l.label(a);
    }
  }

  auto& unit_set = out.add("A <= V(I(A))");
  auto& ivi = out.add("I(V(I(A))) = I(A)");
  for (const std::uint64_t m : masks) {
    ++unit_set.cases;
    const int ia = intersect_mask(m);
    if ((m & ~v_mask[static_cast<std::size_t>(ia)]) != 0 && unit_set.pass) {
      unit_set.pass = false;
      unit_set.witness = mask_text(l, pts, m) + " not inside V(I(A))";
    }
    ++ivi.cases;
    if (intersect_mask(v_mask[static_cast<std::size_t>(ia)]) != ia && ivi.pass) {
      ivi.pass = false;
      ivi.witness = "I∘V∘I differs from I at " + mask_text(l, pts, m);
    }
  }

  auto& v_rev = out.add("V order-reversing");
  for (int a = 0; a < l.n && v_rev.pass; ++a) {
    for (int b = 0; b < l.n; ++b) {
      if (!l.leq(a, b)) continue;
      ++v_rev.cases;
      if ((v_mask[static_cast<std::size_t>(b)] & ~v_mask[static_cast<std::size_t>(a)]) != 0) {
        v_rev.pass = false;
        v_rev.witness = "V not reversed on " + l.label(a) + " <= " + l.label(b);
        break;
      }
    }
  }

  auto& i_rev = out.add("I order-reversing");
  std::vector<int> i_of(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) i_of[i] = intersect_mask(masks[i]);
  for (std::size_t i = 0; i < masks.size() && i_rev.pass; ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if ((masks[i] & ~masks[j]) != 0) continue;  // need masks[i] subset of masks[j]
      ++i_rev.cases;
      if (!l.leq(i_of[j], i_of[i])) {
        i_rev.pass = false;
        i_rev.witness = "I not reversed on " + mask_text(l, pts, masks[i]) +
                        " <= " + mask_text(l, pts, masks[j]);
        break;
      }
    }
  }
  return out;
}

int ClosedElements::position_of(int element) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), element);
  if (it == elems.end() || *it != element) return -1;
  return static_cast<int>(it - elems.begin());
}

ClosedElements closed_elements(const SpectrumContext& ctx, bool with_tilde) {
  const FinLattice& l = ctx.lattice;
  ClosedElements c;
  c.members = ElemSet(static_cast<std::size_t>(l.n));
  for (int a = 0; a < l.n; ++a)
    if (intersect_point_set(ctx, variety(ctx, a)) == a)
      c.members.set(static_cast<std::size_t>(a));
  if (!ctx.points.is_subset_of(c.members))
    fail(Errc::OracleDisagreement, "some point of X is not a closed element");
  c.elems = members_of(c.members);
  if (!with_tilde) return c;
  const std::size_t k = c.elems.size();
  c.tilde_tab.assign(k * k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      ElemSet pair(static_cast<std::size_t>(l.n));
      pair.set(static_cast<std::size_t>(c.elems[i]));
      pair.set(static_cast<std::size_t>(c.elems[j]));
      const int t = tilde_join(ctx, pair);
      c.tilde_tab[i * k + j] = t;
      c.tilde_tab[j * k + i] = t;
    }
  }
  return c;
}

int tilde_join(const SpectrumContext& ctx, const ElemSet& y) {
  const FinLattice& l = ctx.lattice;
  // Membership in C(L) is the fixpoint condition; checking it directly keeps
  // this callable while closed_elements is still being built.
  for_each_member(y, [&](int c) {
    if (intersect_point_set(ctx, variety(ctx, c)) != c)
      fail(Errc::NotClosedElements,
           l.label(c) + " is not a closed element");
  });
  const int via_iv = intersect_point_set(ctx, variety(ctx, join_all(l, y)));
  ElemSet above(static_cast<std::size_t>(l.n));
  for (int c = 0; c < l.n; ++c) {
    if (intersect_point_set(ctx, variety(ctx, c)) != c) continue;
    bool upper = true;
    for_each_member(y, [&](int v) { upper = upper && l.leq(v, c); });
    if (upper) above.set(static_cast<std::size_t>(c));
  }
  const int via_bounds = meet_all(l, above);
  if (via_iv != via_bounds)
    fail(Errc::OracleDisagreement,
         "modified-join formulas disagree on " + set_text(l, y) + ": " +
             l.label(via_iv) + " vs " + l.label(via_bounds));
  return via_iv;
}

XTopResult is_x_top(const SpectrumContext& ctx) {
  const FinLattice& l = ctx.lattice;
  const auto image = variety_image(ctx);
  auto in_image = [&](const PointSet& s) {
    return std::binary_search(image.begin(), image.end(), s);
  };
  for (int a = 0; a < l.n; ++a) {
    const PointSet va = variety(ctx, a);
    for (int b = a; b < l.n; ++b) {
      if (!in_image(va | variety(ctx, b))) return {false, a, b};
    }
  }
  return {};
}

bool is_x_top_via_c(const SpectrumContext& ctx) {
  const ClosedElements c = closed_elements(ctx, false);
  bool ok = true;
  for_each_member(ctx.points, [&](int p) {
    ok = ok && is_strongly_irreducible(ctx.lattice, c.members, p);
  });
  return ok;
}

bool is_x_top_via_d(const SpectrumContext& ctx) {
  const ClosedElements c = closed_elements(ctx);
  bool irreducible_points = true;
  for_each_member(ctx.points, [&](int p) {
    irreducible_points = irreducible_points && is_irreducible(ctx.lattice, c.members, p);
  });
  if (!irreducible_points) return false;
  const auto tilde = [&](int a, int b) {
    return c.tilde(c.position_of(a), c.position_of(b));
  };
  const auto meet = [&](int a, int b) { return ctx.lattice.meet(a, b); };
  return is_distributive(ctx.lattice, c.members, meet, tilde);
}

StronglyXTopResult is_strongly_x_top(const SpectrumContext& ctx) {
  const FinLattice& l = ctx.lattice;
  StronglyXTopResult direct;
  for (auto p = ctx.points.find_first();
       p != ElemSet::npos && direct.value; p = ctx.points.find_next(p)) {
    for (int a = 0; a < l.n && direct.value; ++a) {
      for (int b = 0; b < l.n; ++b) {
        if (l.leq(l.meet(a, b), static_cast<int>(p)) &&
            !l.leq(a, static_cast<int>(p)) && !l.leq(b, static_cast<int>(p))) {
          direct = {false, static_cast<int>(p), a, b};
          break;
        }
      }
    }
  }
  // Independent route: V a lattice anti-homomorphism.
  bool anti_hom = true;
  for (int a = 0; a < l.n && anti_hom; ++a) {
    const PointSet va = variety(ctx, a);
    for (int b = 0; b < l.n; ++b) {
      if (variety(ctx, l.meet(a, b)) != (va | variety(ctx, b)) ||
          variety(ctx, l.join(a, b)) != (va & variety(ctx, b))) {
        anti_hom = false;
        break;
      }
    }
  }
  if (anti_hom != direct.value)
    fail(Errc::OracleDisagreement,
         "strong X-top criteria disagree: irreducibility says " +
             std::string(direct.value ? "yes" : "no") +
             ", anti-homomorphism says " + (anti_hom ? "yes" : "no"));
  return direct;
}

TopSpace build_topology(const SpectrumContext& ctx) {
  const XTopResult xt = is_x_top(ctx);
  if (!xt.value)
    fail(Errc::NotXTop, "context is not X-top; offending pair (" +
                            ctx.lattice.label(xt.witness_a) + ", " +
                            ctx.lattice.label(xt.witness_b) + ")");
  const auto point_ids = members_of(ctx.points);
  std::vector<std::string> labels;
  labels.reserve(point_ids.size());
  for (int p : point_ids) labels.push_back(ctx.lattice.label(p));
  std::map<int, int> pos;
  for (std::size_t i = 0; i < point_ids.size(); ++i)
    pos[point_ids[i]] = static_cast<int>(i);
  std::vector<ElemSet> closed;
  for (const auto& v : variety_image(ctx)) {
    ElemSet s(point_ids.size());
    for_each_member(v, [&](int p) { s.set(static_cast<std::size_t>(pos.at(p))); });
    closed.push_back(std::move(s));
  }
  TopSpace t = make_space(std::move(labels), std::move(closed));
  const TopologyCheck check = verify_topology(t);
  if (!check.ok)
    fail(Errc::OracleDisagreement, "variety family is not a topology: " + check.witness);
  return t;
}

namespace {

bool irreducible_in_image(const std::vector<PointSet>& image, const PointSet& a) {
  for (const auto& c1 : image) {
    for (const auto& c2 : image) {
      if (a.is_subset_of(c1 | c2) && !a.is_subset_of(c1) && !a.is_subset_of(c2))
        return false;
    }
  }
  return true;
}

}  // namespace

bool is_irreducible_point_set(const SpectrumContext& ctx, const PointSet& a) {
  if (a.none()) fail(Errc::EmptySet, "irreducibility needs a non-empty subset");
  const XTopResult xt = is_x_top(ctx);
  if (!xt.value) fail(Errc::NotXTop, "context is not X-top");
  return irreducible_in_image(variety_image(ctx), a);
}

CheckList check_irreducible_correspondence(const SpectrumContext& ctx,
                                           const SampleSpec& sample) {
  CheckList out;
  const FinLattice& l = ctx.lattice;
  const ClosedElements c = closed_elements(ctx, false);
  const bool strongly = is_strongly_x_top(ctx).value;
  const auto subsets = subsets_of(ctx.points, sample);
  const auto image = variety_image(ctx);

  auto& forward = out.add("I(A) irreducible in C(L) forces A irreducible");
  auto& equiv = out.add("strongly X-top: the three conditions are equivalent");
  auto& in_x = out.add("I(A) in X forces A irreducible");
  for (const auto& a : subsets) {
    const int ia = intersect_point_set(ctx, a);
    const bool a_irr = irreducible_in_image(image, a);
    const bool ia_irr_c = is_irreducible(l, c.members, ia);
    ++forward.cases;
    if (ia_irr_c && !a_irr && forward.pass) {
      forward.pass = false;
      forward.witness = set_text(l, a);
    }
    ++in_x.cases;
    if (ctx.points.test(static_cast<std::size_t>(ia)) && !a_irr && in_x.pass) {
      in_x.pass = false;
      in_x.witness = set_text(l, a);
    }
    if (strongly) {
      ++equiv.cases;
      const bool ia_strong_l = is_strongly_irreducible(l, l.all(), ia);
      const bool ia_irr_l = is_irreducible(l, l.all(), ia);
      if ((ia_irr_c != a_irr || a_irr != ia_strong_l ||
           ia_strong_l != ia_irr_l) &&
          equiv.pass) {
        equiv.pass = false;
        equiv.witness = set_text(l, a);
      }
    }
  }

  auto& interval = out.add("[x,1[ inside X is a chain");
  for_each_member(ctx.points, [&](int x) {
    ElemSet interval_set = upset(l, x);
    interval_set.reset(static_cast<std::size_t>(l.top));
    if (!interval_set.is_subset_of(ctx.points)) return;
    ++interval.cases;
    if (!is_chain(l, interval_set) && interval.pass) {
      interval.pass = false;
      interval.witness = "[" + l.label(x) + ",1[";
    }
  });
  return out;
}

}  // namespace spectop
