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

#include "fixtures.hpp"
#include "spectop/json_io.hpp"
#include "spectop/report.hpp"

using namespace spectop;

TEST_CASE("module report: semisimple with distinct primes") {
  const AnalysisReport r = analyze_module("Z: 2,3,5");
  CHECK(r.flags.at("topf") == true);
  CHECK(r.flags.at("strongly_topf") == true);
  CHECK(r.flags.at("discrete") == true);
  CHECK(r.flags.at("t2") == true);
  CHECK(r.flags.at("consistent") == true);
  CHECK(r.flags.at("firstless") == false);
  CHECK(r.flags.at("uniform") == false);
  CHECK(r.details["spec_first"].size() == 3);
  CHECK(r.details["socle"] == "M");
  CHECK(r.details["coradical"] == "M");
  CHECK(r.details["irreducible_components"].size() == 3);
}

TEST_CASE("module report: homogeneous semisimple fails topf and min-property") {
  const AnalysisReport r = analyze_module("Z: 2,2");
  CHECK(r.flags.at("topf") == false);
  CHECK(r.flags.at("min_property") == false);
  CHECK(r.flags.at("multiplication") == false);
  CHECK_FALSE(r.flags.at("t0").has_value());  // no xi^f space without topf
  CHECK(r.witnesses.contains("topf"));
  CHECK(r.witnesses.contains("min_property"));
  CHECK(r.witnesses.contains("multiplication"));
  // tau_c still exists and is the two-set family.
  CHECK(r.details["tau_c"]["closed_sets"].size() == 2);
}

TEST_CASE("module report: Z/4 chain") {
  const AnalysisReport r = analyze_module("Z: 4");
  CHECK(r.flags.at("strongly_topf") == true);
  CHECK(r.flags.at("uniserial") == true);
  CHECK(r.flags.at("ultraconnected") == true);
  CHECK(r.flags.at("uniform") == true);
  CHECK(r.flags.at("colocal") == true);
  CHECK(r.flags.at("comultiplication") == true);
  CHECK(r.details["spec_first"].size() == 1);
}

TEST_CASE("every false flag carries a witness") {
  for (const std::string spec : {"Z: 2,3,5", "Z: 2,2", "Z: 4", "Z: 8,3"}) {
    const AnalysisReport r = analyze_module(spec);
    for (const auto& [name, value] : r.flags) {
      if (value.has_value() && !*value) {
        INFO(spec, " flag ", name);
        CHECK(r.witnesses.contains(name));
      }
    }
  }
}

TEST_CASE("witnesses are machine-checkable") {
  const AnalysisReport r = analyze_module("Z: 2,3");
  // uniform=false: the named pair must really intersect in 0.
  REQUIRE(r.flags.at("uniform") == false);
  const auto& w = r.witnesses["uniform"]["pair"];
  const FiniteModule m = parse_module_spec("Z: 2,3");
  const SubLattice subs = enumerate_submodules(m);
  const int a = subs.lat.index_of(w[0].get<std::string>());
  const int b = subs.lat.index_of(w[1].get<std::string>());
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(a != subs.lat.bottom);
  CHECK(b != subs.lat.bottom);
  CHECK(subs.lat.meet(a, b) == subs.lat.bottom);
}

TEST_CASE("ring reports") {
  const AnalysisReport z12 = analyze_ring("Zmod:12");
  CHECK(z12.flags.at("x_top") == true);
  CHECK(z12.flags.at("strongly_x_top") == true);
  CHECK(z12.flags.at("left_x_top") == true);
  CHECK(z12.flags.at("left_strongly_x_top") == true);
  CHECK(z12.details["prime_spectrum"].size() == 2);

  const AnalysisReport m2 = analyze_ring("M2F2");
  CHECK(m2.flags.at("x_top") == true);
  CHECK(m2.flags.at("strongly_x_top") == true);
  CHECK(m2.flags.at("left_x_top") == true);
  CHECK(m2.flags.at("left_strongly_x_top") == false);
  CHECK(m2.witnesses.contains("left_strongly_x_top"));
  CHECK(m2.details["prime_spectrum"].size() == 1);
}

TEST_CASE("lattice context reports") {
  const AnalysisReport diamond = analyze_lattice_context(fixtures::m3_points_abc());
  CHECK(diamond.flags.at("x_top") == false);
  CHECK(diamond.witnesses.contains("x_top"));

  const SpectrumContext nested =
      make_context(fixtures::chain(3), make_set(3, {0, 1}));
  const AnalysisReport chain_report = analyze_lattice_context(nested);
  CHECK(chain_report.flags.at("x_top") == true);
  CHECK(chain_report.details["topology"]["closed_sets"].size() == 3);
  CHECK(chain_report.flags.at("t0") == true);
  CHECK(chain_report.flags.at("t1") == false);
  CHECK(chain_report.flags.at("sober") == true);
}

TEST_CASE("report round-trip and determinism") {
  const AnalysisReport r = analyze_module("Z: 8,3");
  const nlohmann::json j = report_to_json(r);
  const AnalysisReport back = report_from_json(j);
  CHECK(report_to_json(back).dump(2) == j.dump(2));
  const AnalysisReport again = analyze_module("Z: 8,3");
  CHECK(report_to_json(again).dump(2) == j.dump(2));
  CHECK_FALSE(report_to_table(r).empty());
}

TEST_CASE("lattice JSON round-trip") {
  const FinLattice m3 = fixtures::m3();
  const nlohmann::json j = lattice_to_json(m3);
  const FinLattice back = lattice_from_json(j);
  CHECK(back.n == m3.n);
  CHECK(back.labels == m3.labels);
  CHECK(back.meet_tab == m3.meet_tab);
  CHECK(back.join_tab == m3.join_tab);
}

TEST_CASE("topspace JSON round-trip") {
  const TopSpace s = fixtures::sierpinski();
  const TopSpace back = topspace_from_json(topspace_to_json(s));
  CHECK(back.points == s.points);
  CHECK(back.closed == s.closed);
}

TEST_CASE("hasse export") {
  const std::string dot = hasse_dot(fixtures::chain(3));
  CHECK(dot.find("\"c0\" -> \"c1\"") != std::string::npos);
  CHECK(dot.find("\"c1\" -> \"c2\"") != std::string::npos);
  CHECK(dot.find("\"c0\" -> \"c2\"") == std::string::npos);  // covers only
  CHECK(cover_pairs(fixtures::m3()).size() == 6);
}
