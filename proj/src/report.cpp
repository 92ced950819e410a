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

#include "spectop/report.hpp"

#include <algorithm>
#include <sstream>

#include "spectop/errors.hpp"
#include "spectop/json_io.hpp"

namespace spectop {

namespace {

nlohmann::json point_list(const TopSpace& t, const ElemSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for_each_member(s, [&](int p) { out.push_back(t.points[static_cast<std::size_t>(p)]); });
  return out;
}

nlohmann::json check_list_json(const CheckList& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks.checks) {
    nlohmann::json one;
    one["name"] = c.name;
    one["cases"] = c.cases;
    one["pass"] = c.pass;
    if (!c.pass) one["witness"] = c.witness;
    out.push_back(one);
  }
  return out;
}

// Galois, closed elements, X-top trio, strong X-top; battery when X-top.
void context_analysis(const SpectrumContext& ctx, const std::string& prefix,
                      const SampleSpec& sample, AnalysisReport& r) {
  const FinLattice& l = ctx.lattice;
  r.details[prefix + "galois_laws"] = check_list_json(check_galois_laws(ctx, sample));

  const ClosedElements c = closed_elements(ctx);
  nlohmann::json closed_names = nlohmann::json::array();
  for (int e : c.elems) closed_names.push_back(l.label(e));
  r.details[prefix + "closed_elements"] = closed_names;

  const XTopResult xt = is_x_top(ctx);
  const bool via_c = is_x_top_via_c(ctx);
  const bool via_d = is_x_top_via_d(ctx);
  if (xt.value != via_c || via_c != via_d)
    fail(Errc::OracleDisagreement, "X-top criteria disagree");
  nlohmann::json xt_witness;
  if (!xt.value)
    xt_witness = {{"pair", {l.label(xt.witness_a), l.label(xt.witness_b)}}};
  r.set_flag(prefix + "x_top", xt.value, xt_witness);

  const StronglyXTopResult sx = is_strongly_x_top(ctx);
  nlohmann::json sx_witness;
  if (!sx.value)
    sx_witness = {{"point", l.label(sx.witness_p)},
                  {"pair", {l.label(sx.witness_a), l.label(sx.witness_b)}}};
  r.set_flag(prefix + "strongly_x_top", sx.value, sx_witness);

  if (xt.value) {
    const TopSpace space = build_topology(ctx);
    r.details[prefix + "topology"] = topspace_to_json(space);
    r.details[prefix + "correspondence"] =
        check_list_json(check_irreducible_correspondence(ctx, sample));
    analyze_space(space, prefix, r);
  }
}

}  // namespace

void analyze_space(const TopSpace& t, const std::string& prefix,
                   AnalysisReport& r) {
  if (t.points.empty()) {
    for (const char* f : {"t0", "t1", "t2", "discrete", "connected",
                          "irreducible", "ultraconnected", "sober", "compact"})
      r.unset_flag(prefix + f);
    return;
  }
  const std::size_t n = t.points.size();

  bool t0 = is_t0(t);
  nlohmann::json t0_witness;
  if (!t0) {
    for (std::size_t p = 0; p < n && t0_witness.is_null(); ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        ElemSet sp(n), sq(n);
        sp.set(p);
        sq.set(q);
        if (closure(t, sp) == closure(t, sq)) {
          t0_witness = {{"points", {t.points[p], t.points[q]}}};
          break;
        }
      }
    }
  }
  r.set_flag(prefix + "t0", t0, t0_witness);

  bool t1 = is_t1(t);
  nlohmann::json t1_witness;
  if (!t1) {
    for (std::size_t p = 0; p < n; ++p) {
      ElemSet sp(n);
      sp.set(p);
      if (!t.is_closed(sp)) {
        t1_witness = {{"point", t.points[p]}};
        break;
      }
    }
  }
  r.set_flag(prefix + "t1", t1, t1_witness);

  bool t2 = is_t2(t);
  nlohmann::json t2_witness;
  if (!t2) {
    const auto opens = open_sets(t);
    for (std::size_t p = 0; p < n && t2_witness.is_null(); ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        bool separated = false;
        for (const auto& u : opens) {
          if (!u.test(p)) continue;
          for (const auto& v : opens)
            if (v.test(q) && !u.intersects(v)) separated = true;
        }
        if (!separated) {
          t2_witness = {{"points", {t.points[p], t.points[q]}}};
          break;
        }
      }
    }
  }
  r.set_flag(prefix + "t2", t2, t2_witness);

  r.set_flag(prefix + "discrete", is_discrete(t), t1_witness);

  bool connected = is_connected(t);
  nlohmann::json conn_witness;
  if (!connected) {
    for (const auto& c : t.closed) {
      if (c.any() && c != t.everything() && t.is_closed(~c)) {
        conn_witness = {{"clopen", point_list(t, c)}};
        break;
      }
    }
  }
  r.set_flag(prefix + "connected", connected, conn_witness);

  bool irred = is_irreducible_space(t);
  nlohmann::json irred_witness;
  if (!irred) {
    for (const auto& a : t.closed) {
      if (a == t.everything()) continue;
      for (const auto& b : t.closed) {
        if (b == t.everything()) continue;
        if ((a | b) == t.everything()) {
          irred_witness = {{"cover", {point_list(t, a), point_list(t, b)}}};
          break;
        }
      }
      if (!irred_witness.is_null()) break;
    }
  }
  r.set_flag(prefix + "irreducible", irred, irred_witness);

  bool ultra = is_ultraconnected(t);
  nlohmann::json ultra_witness;
  if (!ultra) {
    for (const auto& a : t.closed) {
      if (a.none()) continue;
      for (const auto& b : t.closed) {
        if (b.any() && !a.intersects(b)) {
          ultra_witness = {{"disjoint", {point_list(t, a), point_list(t, b)}}};
          break;
        }
      }
      if (!ultra_witness.is_null()) break;
    }
  }
  r.set_flag(prefix + "ultraconnected", ultra, ultra_witness);

  const Sobriety sob = is_sober(t);
  r.set_flag(prefix + "sober", sob.value, nlohmann::json{{"witness", sob.witness}});
  nlohmann::json generic = nlohmann::json::array();
  for (std::size_t i = 0; i < sob.irreducible_closed.size(); ++i) {
    generic.push_back(
        {{"closed_set", point_list(t, sob.irreducible_closed[i])},
         {"generic_point", sob.generic_point[i] < 0
                               ? nlohmann::json()
                               : nlohmann::json(t.points[static_cast<std::size_t>(
                                     sob.generic_point[i])])}});
  }
  r.details[prefix + "generic_points"] = generic;

  r.set_flag(prefix + "compact", is_compact(t));

  nlohmann::json components = nlohmann::json::array();
  for (const auto& comp : irreducible_components(t))
    components.push_back(point_list(t, comp));
  r.details[prefix + "irreducible_components"] = components;
  r.details[prefix + "max_closed_chain"] = is_noetherian(t).max_chain_len;
}

AnalysisReport analyze_lattice_context(const SpectrumContext& ctx,
                                       const SampleSpec& sample) {
  AnalysisReport r;
  r.kind = "lattice";
  nlohmann::json x_names = nlohmann::json::array();
  for (const auto& p : ctx.point_labels()) x_names.push_back(p);
  r.details["X"] = x_names;
  r.details["element_count"] = ctx.lattice.n;
  context_analysis(ctx, "", sample, r);
  return r;
}

AnalysisReport analyze_module(const std::string& spec, const Caps& caps) {
  const FiniteModule m = parse_module_spec(spec, caps);
  const SubLattice subs = enumerate_submodules(m, caps);
  const FinLattice& lat = subs.lat;

  AnalysisReport r;
  r.kind = "module";
  r.input = m.spec;
  r.details["order"] = m.n;
  r.details["submodule_count"] = lat.n;
  if (m.over_z()) r.details["exponent"] = m.exponent();

  const auto firsts = spec_first(m, subs);
  const auto simples = simple_submodules(subs);
  const int soc = socle(subs);
  const int corad = coradical_f(m, subs);

  nlohmann::json first_names = nlohmann::json::array();
  nlohmann::json first_anns = nlohmann::json::object();
  for (int f : firsts) {
    first_names.push_back(lat.label(f));
    first_anns[lat.label(f)] = annihilator(m, subs.at(f)).text(m);
  }
  r.details["spec_first"] = first_names;
  r.details["spec_first_annihilators"] = first_anns;
  nlohmann::json simple_names = nlohmann::json::array();
  for (int s : simples) simple_names.push_back(lat.label(s));
  r.details["simples"] = simple_names;
  r.details["socle"] = lat.label(soc);
  r.details["coradical"] = lat.label(corad);

  nlohmann::json firstless_witness;
  if (!firsts.empty())
    firstless_witness = {{"first_submodule", lat.label(firsts.front())}};
  r.set_flag("firstless", firsts.empty(), firstless_witness);

  const TopfResult topf = is_topf_module(m, subs);
  nlohmann::json topf_witness;
  if (!topf.value)
    topf_witness = {{"pair", {lat.label(topf.witness_a), lat.label(topf.witness_b)}}};
  r.set_flag("topf", topf.value, topf_witness);
  r.set_flag("x_top", topf.value, topf_witness);

  const TopfResult strongly = is_strongly_topf_module(m, subs);
  nlohmann::json strongly_witness;
  if (!strongly.value) {
    strongly_witness = nlohmann::json::object();
    if (strongly.witness_p >= 0)
      strongly_witness["first"] = lat.label(strongly.witness_p);
    if (strongly.witness_a >= 0)
      strongly_witness["pair"] = {lat.label(strongly.witness_a),
                                  lat.label(strongly.witness_b)};
  }
  r.set_flag("strongly_topf", strongly.value, strongly_witness);
  r.set_flag("strongly_x_top", strongly.value, strongly_witness);

  // Module-theoretic classifications.
  bool uniform = is_uniform(subs);
  nlohmann::json uniform_witness;
  if (!uniform) {
    for (int a = 0; a < lat.n && uniform_witness.is_null(); ++a) {
      if (a == lat.bottom) continue;
      for (int b = 0; b < lat.n; ++b) {
        if (b == lat.bottom) continue;
        if (lat.meet(a, b) == lat.bottom) {
          uniform_witness = {{"pair", {lat.label(a), lat.label(b)}}};
          break;
        }
      }
    }
  }
  r.set_flag("uniform", uniform, uniform_witness);

  bool essential = has_essential_socle(subs);
  nlohmann::json essential_witness;
  if (!essential) {
    for (int a = 0; a < lat.n; ++a) {
      if (a != lat.bottom && lat.meet(soc, a) == lat.bottom) {
        essential_witness = {{"submodule", lat.label(a)}};
        break;
      }
    }
  }
  r.set_flag("essential_socle", essential, essential_witness);

  bool colocal = is_colocal(subs);
  nlohmann::json colocal_witness;
  if (!colocal) {
    nlohmann::json atoms = nlohmann::json::array();
    for (int s : simples) atoms.push_back(lat.label(s));
    colocal_witness = {{"atoms_with_zero_intersection", atoms}};
  }
  r.set_flag("colocal", colocal, colocal_witness);

  bool min_prop = has_min_property(m, subs);
  nlohmann::json min_witness;
  if (!min_prop) {
    for (std::size_t i = 0; i < simples.size(); ++i) {
      int rest = lat.bottom;
      for (std::size_t j = 0; j < simples.size(); ++j)
        if (j != i) rest = lat.join(rest, simples[j]);
      if (lat.leq(simples[i], rest)) {
        min_witness = {{"simple", lat.label(simples[i])},
                       {"sum_of_others", lat.label(rest)}};
        break;
      }
    }
  }
  r.set_flag("min_property", min_prop, min_witness);

  bool mult = is_multiplication(m, subs);
  nlohmann::json mult_witness;
  if (!mult) {
    for (int h = 0; h < lat.n; ++h) {
      const AnnIdeal colon = colon_ideal(m, subs.at(h), subs.at(lat.top));
      const ElemSet product = ideal_times_module(m, colon, subs.at(lat.top));
      if (product != subs.at(h)) {
        mult_witness = {{"submodule", lat.label(h)},
                        {"colon_ideal", colon.text(m)},
                        {"product", submodule_label(m, product)}};
        break;
      }
    }
  }
  r.set_flag("multiplication", mult, mult_witness);

  bool comult = is_comultiplication(m, subs);
  nlohmann::json comult_witness;
  if (!comult) {
    for (int h = 0; h < lat.n; ++h) {
      const AnnIdeal ann = annihilator(m, subs.at(h));
      const ElemSet torsion = torsion_by(m, ann, subs.at(lat.top));
      if (torsion != subs.at(h)) {
        comult_witness = {{"submodule", lat.label(h)},
                          {"annihilator", ann.text(m)},
                          {"torsion", submodule_label(m, torsion)}};
        break;
      }
    }
  }
  r.set_flag("comultiplication", comult, comult_witness);

  bool uniserial = is_uniserial(subs, lat.top);
  nlohmann::json uniserial_witness;
  if (!uniserial) {
    for (int a = 0; a < lat.n && uniserial_witness.is_null(); ++a)
      for (int b = a + 1; b < lat.n; ++b)
        if (!lat.leq(a, b) && !lat.leq(b, a)) {
          uniserial_witness = {{"incomparable", {lat.label(a), lat.label(b)}}};
          break;
        }
  }
  r.set_flag("uniserial", uniserial, uniserial_witness);

  nlohmann::json maximal_names = nlohmann::json::array();
  for (int f : maximal_under(m, subs, lat.top)) maximal_names.push_back(lat.label(f));
  r.details["maximal_firsts"] = maximal_names;

  // tau_c is a topology for every module.
  const TopSpace tau_c = torsion_subspace_topology(m, subs);
  r.details["tau_c"] = topspace_to_json(tau_c);
  r.details["tau_c_verified"] = true;

  if (topf.value && !topf.firstless) {
    const SpectrumContext ctx = spec_f_context(m, subs);
    const TopSpace space = build_topology(ctx);
    r.details["xi_f"] = topspace_to_json(space);
    analyze_space(space, "", r);
    bool consistent = is_consistent_topf(m, subs, caps.sample);
    nlohmann::json consistent_witness;
    if (!consistent) {
      ElemSet first_set(static_cast<std::size_t>(lat.n));
      for (int f : firsts) first_set.set(static_cast<std::size_t>(f));
      for (const auto& a : subsets_of(ctx.points, caps.sample)) {
        if (!is_irreducible_point_set(ctx, a)) continue;
        const int ia = intersect_point_set(ctx, a);
        if (!first_set.test(static_cast<std::size_t>(ia))) {
          nlohmann::json names = nlohmann::json::array();
          for_each_member(a, [&](int p) { names.push_back(lat.label(p)); });
          consistent_witness = {{"irreducible_subset", names},
                                {"sum", lat.label(ia)}};
          break;
        }
      }
    }
    r.set_flag("consistent", consistent, consistent_witness);
  } else {
    for (const char* f : {"t0", "t1", "t2", "discrete", "connected",
                          "irreducible", "ultraconnected", "sober", "compact"})
      r.unset_flag(f);
    r.unset_flag("consistent");
  }

  r.details["c_ann"] = check_list_json(check_c_ann(m, subs));
  return r;
}

AnalysisReport analyze_ring(const std::string& spec, const Caps& caps) {
  const std::string name = spec;
  FiniteRing ring;
  if (name.rfind("Zmod:", 0) == 0) {
    const std::string ns = name.substr(5);
    if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::BadSpec, "bad modulus in '" + name + "'");
    ring = zmod_ring(std::stoi(ns), caps.max_order);
  } else if (name.rfind("M2F", 0) == 0) {
    const std::string qs = name.substr(3);
    if (qs.empty() || qs.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::BadSpec, "bad field size in '" + name + "'");
    ring = matrix_ring(std::stoi(qs));
  } else {
    fail(Errc::BadSpec, "unknown ring spec '" + name + "'");
  }

  AnalysisReport r;
  r.kind = "ring";
  r.input = name;
  r.details["ring_order"] = ring.n;
  r.details["commutative"] = ring.commutative;

  const IdealLattice ideals = ideal_lattice(ring);
  const ElemSet primes = prime_spectrum(ring, ideals);
  nlohmann::json prime_names = nlohmann::json::array();
  for_each_member(primes, [&](int p) { prime_names.push_back(ideals.lat.label(p)); });
  r.details["prime_spectrum"] = prime_names;
  r.details["ideal_count"] = ideals.lat.n;

  if (primes.none()) fail(Errc::BadX, "ring has no prime ideals");
  const SpectrumContext two_sided = make_context(ideals.lat, primes);
  context_analysis(two_sided, "", SampleSpec{}, r);

  // Left-ideal lattice with the same point set.
  const IdealLattice left = left_ideal_lattice(ring);
  r.details["left_ideal_count"] = left.lat.n;
  ElemSet left_x(static_cast<std::size_t>(left.lat.n));
  for_each_member(primes, [&](int p) {
    const int idx = left.index_of(ideals.members[static_cast<std::size_t>(p)]);
    if (idx < 0)
      fail(Errc::OracleDisagreement, "prime ideal missing from the left lattice");
    left_x.set(static_cast<std::size_t>(idx));
  });
  const SpectrumContext left_ctx = make_context(left.lat, left_x);
  const XTopResult left_xt = is_x_top(left_ctx);
  nlohmann::json left_witness;
  if (!left_xt.value)
    left_witness = {{"pair", {left.lat.label(left_xt.witness_a),
                              left.lat.label(left_xt.witness_b)}}};
  r.set_flag("left_x_top", left_xt.value, left_witness);
  const StronglyXTopResult left_sx = is_strongly_x_top(left_ctx);
  nlohmann::json left_sx_witness;
  if (!left_sx.value)
    left_sx_witness = {{"point", left.lat.label(left_sx.witness_p)},
                       {"pair", {left.lat.label(left_sx.witness_a),
                                 left.lat.label(left_sx.witness_b)}}};
  r.set_flag("left_strongly_x_top", left_sx.value, left_sx_witness);
  return r;
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["input"] = r.input;
  nlohmann::json flags;
  for (const auto& [name, value] : r.flags)
    flags[name] = value.has_value() ? nlohmann::json(*value) : nlohmann::json();
  j["flags"] = flags;
  j["witnesses"] = r.witnesses;
  j["details"] = r.details;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.kind = j.value("kind", "");
  r.input = j.value("input", "");
  if (j.contains("flags"))
    for (const auto& [name, value] : j["flags"].items())
      r.flags[name] = value.is_null() ? std::optional<bool>() : std::optional<bool>(value.get<bool>());
  if (j.contains("witnesses")) r.witnesses = j["witnesses"];
  if (j.contains("details")) r.details = j["details"];
  return r;
}

std::string report_to_table(const AnalysisReport& r) {
  std::ostringstream os;
  os << "kind:  " << r.kind << "\n";
  os << "input: " << r.input << "\n";
  for (const auto& [name, value] : r.flags) {
    os << "  " << name << ": "
       << (value.has_value() ? (*value ? "true" : "false") : "n/a");
    if (!value.value_or(true) && r.witnesses.contains(name))
      os << "   witness " << r.witnesses[name].dump();
    os << "\n";
  }
  for (const auto& [key, value] : r.details.items())
    os << "  " << key << ": " << value.dump() << "\n";
  return os.str();
}

}  // namespace spectop
