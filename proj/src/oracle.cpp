// Copyright 2026 The afra-toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afra/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace afra {

namespace {

using Mask = std::uint32_t;

// Universe of n named nodes; hits[i] is the mask of nodes that node i
// defeats (or attacks, for a classical framework).
struct MaskGraph {
  std::vector<ElementId> names;
  std::vector<Mask> hits;
};

void require_small(std::size_t n) {
  if (n > kOracleMaxElements)
    throw Error(ErrorCode::TooLargeToEnumerate,
                "oracle is limited to " + std::to_string(kOracleMaxElements) +
                    " elements, got " + std::to_string(n));
}

MaskGraph from_framework(const Framework& fw) {
  require_small(fw.size());
  MaskGraph g;
  g.names = fw.all_elements().members();
  auto position = [&](const ElementId& name) {
    std::size_t i = 0;
    while (g.names[i] != name) ++i;
    return i;
  };
  auto bit = [&](const ElementId& name) { return Mask{1} << position(name); };
  g.hits.assign(g.names.size(), 0);
  const auto attacks = fw.attacks();
  for (const auto& a : attacks) {
    Mask m = bit(a.target.id);  // direct
    for (const auto& b : attacks)
      if (b.source == a.target.id) m |= bit(b.id);  // indirect
    g.hits[position(a.id)] = m;
  }
  return g;
}

MaskGraph from_dung(const DungAF& af) {
  require_small(af.size());
  MaskGraph g;
  g.names = af.arguments();
  g.hits.assign(g.names.size(), 0);
  for (const auto& [from, to] : af.attacks())
    g.hits[*af.index_of(from)] |= Mask{1} << *af.index_of(to);
  return g;
}

ExtensionSet brute_force(const MaskGraph& g, SemanticsId which) {
  const auto n = g.names.size();
  const Mask all = (Mask{1} << n) - 1;

  std::vector<Mask> defeaters(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t v = 0; v < n; ++v)
      if (g.hits[a] >> v & 1) defeaters[v] |= Mask{1} << a;

  auto plus = [&](Mask s) {
    Mask p = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) p |= g.hits[i];
    return p;
  };
  auto acceptable_all = [&](Mask s) {  // F(s)
    const Mask p = plus(s);
    Mask f = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((defeaters[v] & ~p) == 0) f |= Mask{1} << v;
    return f;
  };

  std::vector<Mask> cf, adm, comp, stab;
  for (std::uint64_t raw = 0; raw <= all; ++raw) {
    const auto s = static_cast<Mask>(raw);
    const Mask p = plus(s);
    if (p & s) continue;
    cf.push_back(s);
    const Mask f = acceptable_all(s);
    if ((s & ~f) == 0) adm.push_back(s);
    if (f == s) comp.push_back(s);
    if ((s | p) == all) stab.push_back(s);
  }

  auto maximal = [](const std::vector<Mask>& sets) {
    std::vector<Mask> out;
    for (auto s : sets) {
      bool dominated = false;
      for (auto t : sets)
        if (t != s && (s & ~t) == 0) dominated = true;
      if (!dominated) out.push_back(s);
    }
    return out;
  };

  std::vector<Mask> result;
  switch (which) {
    case SemanticsId::conflict_free: result = cf; break;
    case SemanticsId::admissible: result = adm; break;
    case SemanticsId::complete: result = comp; break;
    case SemanticsId::stable: result = stab; break;
    case SemanticsId::preferred: result = maximal(adm); break;
    case SemanticsId::grounded:
      // Least complete extension.
      for (auto c : comp) {
        bool least = true;
        for (auto d : comp)
          if ((c & ~d) != 0) least = false;
        if (least) result.push_back(c);
      }
      break;
    case SemanticsId::semi_stable:
      for (auto c : comp) {
        const Mask rc = c | plus(c);
        bool dominated = false;
        for (auto d : comp) {
          const Mask rd = d | plus(d);
          if (rc != rd && (rc & ~rd) == 0) dominated = true;
        }
        if (!dominated) result.push_back(c);
      }
      break;
    case SemanticsId::ideal: {
      Mask common = all;
      for (auto p : maximal(adm)) common &= p;
      std::vector<Mask> ideal_sets;
      for (auto a : adm)
        if ((a & ~common) == 0) ideal_sets.push_back(a);
      result = maximal(ideal_sets);
      break;
    }
  }

  std::vector<ElementSet> exts;
  for (auto s : result) {
    std::vector<ElementId> members;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) members.push_back(g.names[i]);
    exts.emplace_back(std::move(members));
  }
  return ExtensionSet(which, std::move(exts));
}

}  // namespace

ExtensionSet brute_force(const Framework& fw, SemanticsId which) {
  return brute_force(from_framework(fw), which);
}

ExtensionSet brute_force(const DungAF& af, SemanticsId which) {
  return brute_force(from_dung(af), which);
}

OracleReport cross_check(const Framework& fw, SemanticsId which,
                         const SolveOptions& options) {
  auto expected = brute_force(fw, which);
  auto actual = solve(fw, which, options);
  const bool agree = expected.extensions() == actual.extensions();
  return {which, std::move(expected), std::move(actual), agree};
}

}  // namespace afra
