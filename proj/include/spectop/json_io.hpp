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

#ifndef SPECTOP_JSON_IO_HPP_
#define SPECTOP_JSON_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spectop/lattice.hpp"
#include "spectop/spectrum.hpp"
#include "spectop/topology.hpp"

namespace spectop {

// Lattice schema: { "elements": [string...], "leq": [[string,string]...] }.
// Declaration order fixes internal indices. BadInput on schema violations.
FinLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const FinLattice& l);

// Context schema: { "lattice": <lattice schema>, "X": [string...] }.
SpectrumContext context_from_json(const nlohmann::json& j);

// TopSpace schema: { "points": [...], "closed_sets": [[...]...] }.
TopSpace topspace_from_json(const nlohmann::json& j);
nlohmann::json topspace_to_json(const TopSpace& t);

// Covering relation of the lattice order.
std::vector<std::pair<int, int>> cover_pairs(const FinLattice& l);

// Hasse diagram, edges pointing from each element to its upper covers.
std::string hasse_dot(const FinLattice& l);

}  // namespace spectop

#endif  // SPECTOP_JSON_IO_HPP_
