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

// Defeat between elements.
//
// Only attacks defeat. An attack directly defeats its own target, and
// indirectly defeats every attack whose source is that target.

#ifndef AFRA_DEFEAT_HPP
#define AFRA_DEFEAT_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "afra/framework.hpp"

namespace afra {

struct DefeatEdge {
  ElementId attacker;  // always an attack
  ElementId victim;
  bool direct = false;
  bool indirect = false;

  friend bool operator==(const DefeatEdge&, const DefeatEdge&) = default;
};

/// Index-based view of the defeat relation, computed once per framework.
/// Indices refer to Framework::elements().
struct DefeatGraph {
  std::vector<std::vector<std::uint32_t>> defeaters;  // who defeats element i
  std::vector<std::vector<std::uint32_t>> victims;    // whom element i defeats
  std::vector<DefeatEdge> edges;  // sorted by (attacker, victim)
};

/// Cached on the framework; safe to call concurrently.
const DefeatGraph& defeat_graph(const Framework& fw);

bool directly_defeats(const Framework& fw, std::string_view attacker,
                      std::string_view victim);
/// Throws NotAnAttack unless both names are attacks.
bool indirectly_defeats(const Framework& fw, std::string_view attacker,
                        std::string_view victim);
bool defeats(const Framework& fw, std::string_view attacker,
             std::string_view victim);

const std::vector<DefeatEdge>& defeat_relation(const Framework& fw);

}  // namespace afra

#endif  // AFRA_DEFEAT_HPP
