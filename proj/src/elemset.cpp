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

#include "spectop/elemset.hpp"

#include "spectop/errors.hpp"

namespace spectop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NoBounds: return "NoBounds";
    case Errc::GroundNotMeetClosed: return "GroundNotMeetClosed";
    case Errc::GroundNotClosed: return "GroundNotClosed";
    case Errc::NotClosedElements: return "NotClosedElements";
    case Errc::NotXTop: return "NotXTop";
    case Errc::EmptySet: return "EmptySet";
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::ZeroSubmodule: return "ZeroSubmodule";
    case Errc::Firstless: return "Firstless";
    case Errc::NotTopf: return "NotTopf";
    case Errc::OracleDisagreement: return "OracleDisagreement";
    case Errc::BadSpec: return "BadSpec";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadInput: return "BadInput";
    case Errc::BadX: return "BadX";
  }
  return "UnknownError";
}

std::vector<ElemSet> subsets_of(const ElemSet& universe, const SampleSpec& spec) {
  const auto members = members_of(universe);
  const int k = static_cast<int>(members.size());
  std::vector<ElemSet> out;
  if (k == 0) return out;
  if (k <= spec.cap) {
    const std::uint64_t limit = 1ull << k;
    out.reserve(static_cast<std::size_t>(limit - 1));
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      ElemSet s(universe.size());
      for (int i = 0; i < k; ++i)
        if (mask & (1ull << i))
          s.set(static_cast<std::size_t>(members[static_cast<std::size_t>(i)]));
      out.push_back(std::move(s));
    }
    return out;
  }
  // Deterministic sample: singletons, pairs, the whole set, seeded extras.
  for (int i = 0; i < k; ++i) {
    ElemSet s(universe.size());
    s.set(static_cast<std::size_t>(members[static_cast<std::size_t>(i)]));
    out.push_back(std::move(s));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      ElemSet s(universe.size());
      s.set(static_cast<std::size_t>(members[static_cast<std::size_t>(i)]));
      s.set(static_cast<std::size_t>(members[static_cast<std::size_t>(j)]));
      out.push_back(std::move(s));
    }
  }
  out.push_back(universe);
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::uint64_t> dist;
  for (int t = 0; t < spec.samples; ++t) {
    ElemSet s(universe.size());
    std::uint64_t word = 0;
    for (int i = 0; i < k; ++i) {
      if (i % 64 == 0) word = dist(rng);
      if (word & (1ull << (i % 64)))
        s.set(static_cast<std::size_t>(members[static_cast<std::size_t>(i)]));
    }
    if (s.none()) s.set(static_cast<std::size_t>(members[0]));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace spectop
