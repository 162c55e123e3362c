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

#include "afra/defeat.hpp"

#include <algorithm>
#include <tuple>

#include "framework_data.hpp"

namespace afra {

namespace {

std::unique_ptr<const DefeatGraph> compute_defeat_graph(const Framework& fw) {
  const auto els = fw.elements();
  const auto n = static_cast<std::uint32_t>(els.size());

  // Attacks grouped by source argument, for indirect defeat lookups.
  std::vector<std::vector<std::uint32_t>> by_source(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (els[i].kind == ElementKind::attack) by_source[els[i].source].push_back(i);

  auto g = std::make_unique<DefeatGraph>();
  g->defeaters.resize(n);
  g->victims.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (els[a].kind != ElementKind::attack) continue;
    const auto t = els[a].target;
    // A direct and an indirect victim can never coincide: the direct victim
    // is trg(a) itself, the indirect ones are attacks leaving trg(a).
    g->edges.push_back({els[a].name, els[t].name, true, false});
    g->victims[a].push_back(t);
    for (auto b : by_source[t]) {
      g->edges.push_back({els[a].name, els[b].name, false, true});
      g->victims[a].push_back(b);
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    auto& v = g->victims[a];
    std::sort(v.begin(), v.end());
    for (auto w : v) g->defeaters[w].push_back(a);
  }
  std::sort(g->edges.begin(), g->edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.attacker, x.victim) < std::tie(y.attacker, y.victim);
  });
  return g;
}

std::uint32_t lookup(const Framework& fw, std::string_view name) {
  auto i = fw.index_of(name);
  if (!i)
    throw Error(ErrorCode::UnknownElement,
                "'" + std::string(name) + "' is not an element of the framework",
                std::string(name));
  return *i;
}

}  // namespace

const DefeatGraph& defeat_graph(const Framework& fw) {
  const auto& d = fw.data();
  std::call_once(d.defeat_once,
                 [&] { d.defeat = compute_defeat_graph(fw); });
  return *d.defeat;
}

bool directly_defeats(const Framework& fw, std::string_view attacker,
                      std::string_view victim) {
  auto a = lookup(fw, attacker);
  auto v = lookup(fw, victim);
  const auto& e = fw.element(a);
  return e.kind == ElementKind::attack && e.target == v;
}

bool indirectly_defeats(const Framework& fw, std::string_view attacker,
                        std::string_view victim) {
  auto a = lookup(fw, attacker);
  auto b = lookup(fw, victim);
  const auto& ea = fw.element(a);
  const auto& eb = fw.element(b);
  if (ea.kind != ElementKind::attack)
    throw Error(ErrorCode::NotAnAttack, "'" + ea.name + "' is not an attack",
                ea.name);
  if (eb.kind != ElementKind::attack)
    throw Error(ErrorCode::NotAnAttack, "'" + eb.name + "' is not an attack",
                eb.name);
  return ea.target == eb.source;
}

bool defeats(const Framework& fw, std::string_view attacker,
             std::string_view victim) {
  auto a = lookup(fw, attacker);
  auto v = lookup(fw, victim);
  const auto& victims = defeat_graph(fw).victims[a];
  return std::binary_search(victims.begin(), victims.end(), v);
}

const std::vector<DefeatEdge>& defeat_relation(const Framework& fw) {
  return defeat_graph(fw).edges;
}

}  // namespace afra
