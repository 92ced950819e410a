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

#include "spectop/json_io.hpp"

#include <sstream>

#include "spectop/errors.hpp"

namespace spectop {

FinLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    fail(Errc::BadInput, "lattice JSON needs an 'elements' array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail(Errc::BadInput, "elements must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) fail(Errc::BadInput, "'leq' must be an array of pairs");
    for (const auto& p : j["leq"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        fail(Errc::BadInput, "each leq entry must be a [string,string] pair");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return build_lattice_labeled(labels, pairs);
}

nlohmann::json lattice_to_json(const FinLattice& l) {
  nlohmann::json j;
  j["elements"] = l.labels;
  nlohmann::json leq = nlohmann::json::array();
  for (const auto& [a, b] : cover_pairs(l))
    leq.push_back({l.label(a), l.label(b)});
  j["leq"] = leq;
  return j;
}

SpectrumContext context_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lattice"))
    fail(Errc::BadInput, "context JSON needs a 'lattice' object");
  FinLattice l = lattice_from_json(j["lattice"]);
  if (!j.contains("X") || !j["X"].is_array())
    fail(Errc::BadInput, "context JSON needs an 'X' array");
  ElemSet x(static_cast<std::size_t>(l.n));
  for (const auto& e : j["X"]) {
    if (!e.is_string()) fail(Errc::BadX, "X entries must be element labels");
    const int idx = l.index_of(e.get<std::string>());
    if (idx < 0) fail(Errc::BadX, "unknown X label '" + e.get<std::string>() + "'");
    x.set(static_cast<std::size_t>(idx));
  }
  return make_context(std::move(l), std::move(x));
}

TopSpace topspace_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    fail(Errc::BadInput, "topology JSON needs a 'points' array");
  std::vector<std::string> points;
  for (const auto& p : j["points"]) points.push_back(p.get<std::string>());
  std::vector<ElemSet> closed;
  if (j.contains("closed_sets")) {
    for (const auto& c : j["closed_sets"]) {
      ElemSet s(points.size());
      for (const auto& p : c) {
        const auto label = p.get<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
          if (points[i] == label) {
            s.set(i);
            found = true;
            break;
          }
        }
        if (!found) fail(Errc::BadInput, "unknown point '" + label + "'");
      }
      closed.push_back(std::move(s));
    }
  }
  return make_space(std::move(points), std::move(closed));
}

nlohmann::json topspace_to_json(const TopSpace& t) {
  nlohmann::json j;
  j["points"] = t.points;
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& c : t.closed) {
    nlohmann::json one = nlohmann::json::array();
    for_each_member(c, [&](int p) { one.push_back(t.points[static_cast<std::size_t>(p)]); });
    sets.push_back(one);
  }
  j["closed_sets"] = sets;
  return j;
}

std::vector<std::pair<int, int>> cover_pairs(const FinLattice& l) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < l.n; ++a) {
    for (int b = 0; b < l.n; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < l.n; ++c) {
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) {
          covering = false;
          break;
        }
      }
      if (covering) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string hasse_dot(const FinLattice& l) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int a = 0; a < l.n; ++a) os << "  \"" << l.label(a) << "\";\n";
  for (const auto& [a, b] : cover_pairs(l))
    os << "  \"" << l.label(a) << "\" -> \"" << l.label(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace spectop
