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

// Worked examples shared by the unit and acceptance tests. Greek attack
// names are spelled out; C' is written Cp.

#ifndef AFRA_TESTS_FIXTURES_HPP
#define AFRA_TESTS_FIXTURES_HPP

#include <vector>

#include "afra/dung.hpp"
#include "afra/framework.hpp"
#include "afra/interop.hpp"
#include "afra/semantics.hpp"

namespace afra::testing {

// Bob choosing between a ski holiday in Gstaad and a trip to Cuba.
inline Framework bob() {
  return build_framework({"C", "G", "P", "N", "A"},
                         {{"alpha", "G", "C"},
                          {"beta", "C", "G"},
                          {"gamma", "P", "beta"},
                          {"delta", "N", "gamma"},
                          {"epsilon", "A", "N"}});
}

inline ElementSet bob_extension() {
  return {"A", "P", "G", "epsilon", "gamma", "alpha"};
}

// The forty admissible sets of bob().
inline std::vector<ElementSet> bob_admissible() {
  return {
      {},
      {"P"},
      {"A"},
      {"alpha"},
      {"epsilon"},
      {"A", "P"},
      {"epsilon", "gamma"},
      {"G", "alpha"},
      {"P", "epsilon"},
      {"A", "epsilon"},
      {"P", "alpha"},
      {"A", "alpha"},
      {"epsilon", "alpha"},
      {"P", "epsilon", "alpha"},
      {"A", "epsilon", "alpha"},
      {"G", "epsilon", "alpha"},
      {"P", "G", "alpha"},
      {"A", "G", "alpha"},
      {"G", "epsilon", "gamma"},
      {"A", "P", "alpha"},
      {"A", "P", "epsilon"},
      {"P", "epsilon", "gamma"},
      {"A", "epsilon", "gamma"},
      {"epsilon", "gamma", "alpha"},
      {"P", "G", "epsilon", "alpha"},
      {"A", "G", "epsilon", "alpha"},
      {"A", "P", "epsilon", "gamma"},
      {"P", "G", "epsilon", "gamma"},
      {"A", "G", "epsilon", "gamma"},
      {"P", "epsilon", "gamma", "alpha"},
      {"A", "epsilon", "gamma", "alpha"},
      {"G", "epsilon", "gamma", "alpha"},
      {"A", "P", "G", "alpha"},
      {"A", "P", "epsilon", "alpha"},
      {"P", "G", "epsilon", "gamma", "alpha"},
      {"A", "G", "epsilon", "gamma", "alpha"},
      {"A", "P", "epsilon", "gamma", "alpha"},
      {"A", "P", "G", "epsilon", "gamma"},
      {"A", "P", "G", "epsilon", "alpha"},
      {"A", "P", "G", "epsilon", "gamma", "alpha"},
  };
}

// Seven arguments, ten attacks, three complete extensions, no stable one.
inline Framework hat() {
  return build_framework({"A", "B", "C", "D", "E", "F", "G"},
                         {{"alpha", "A", "B"},
                          {"beta", "B", "alpha"},
                          {"gamma", "C", "alpha"},
                          {"delta", "C", "D"},
                          {"epsilon", "E", "delta"},
                          {"eta", "D", "epsilon"},
                          {"zeta", "A", "F"},
                          {"theta", "F", "A"},
                          {"iota", "F", "G"},
                          {"kappa", "G", "G"}});
}

inline ElementSet hat_grounded() { return {"B", "C", "E", "beta", "gamma"}; }
inline ElementSet hat_s() {
  return {"B", "C", "E", "F", "beta", "gamma", "theta", "iota"};
}
inline ElementSet hat_s_star() {
  return {"A", "B", "C", "E", "beta", "gamma", "zeta"};
}

// A plain framework, also readable as a classical one.
inline Framework bar() {
  return build_framework({"A", "B", "C", "D"}, {{"alpha", "A", "B"},
                                                {"beta", "B", "A"},
                                                {"gamma", "A", "C"},
                                                {"delta", "B", "C"},
                                                {"epsilon", "C", "D"},
                                                {"zeta", "D", "C"}});
}

inline Framework self_attack() {
  return build_framework({"A"}, {{"alpha", "A", "A"}});
}

inline Framework empty_framework() { return build_framework({}, {}); }

// B attacks A, C attacks B, and B attacks the attack from C to B.
inline Eaf anomaly_eaf() {
  return Eaf::build({"A", "B", "C"}, {{"B", "A"}, {"C", "B"}},
                    {{"B", {"C", "B"}}});
}

inline Framework anomaly_afra() {
  return build_framework({"A", "B", "C"}, {{"alpha", "B", "A"},
                                           {"beta", "C", "B"},
                                           {"gamma", "B", "beta"}});
}

// A and B attack each other; C attacks (A, B) and Cp attacks (B, A), but
// C and Cp do not attack each other.
inline std::vector<ElementId> defence_args() { return {"A", "B", "C", "Cp"}; }
inline std::vector<EafPair> defence_r() { return {{"A", "B"}, {"B", "A"}}; }
inline std::vector<EafDefeater> defence_d() {
  return {{"C", {"A", "B"}}, {"Cp", {"B", "A"}}};
}

inline Framework defence_afra() {
  return build_framework({"A", "B", "C", "Cp"}, {{"alpha", "A", "B"},
                                                 {"beta", "B", "A"},
                                                 {"gamma", "C", "alpha"},
                                                 {"delta", "Cp", "beta"}});
}

// Bob's framework encoded with not(.) companions.
inline Hoaf bob_hoaf() {
  std::vector<std::string> a_c = {"A", "N", "P", "C", "G"};
  std::map<std::string, std::string> not_map;
  for (const auto& a : a_c) not_map[a] = "not(" + a + ")";
  return Hoaf::build(
      a_c, not_map, {"C-G", "G-C", "P-(C-G)", "N-(P-(C-G))", "A-N"},
      {{"A", "not(A)"},
       {"N", "not(N)"},
       {"P", "not(P)"},
       {"C", "not(C)"},
       {"G", "not(G)"},
       {"not(C)", "C-G"},
       {"C-G", "G"},
       {"not(G)", "G-C"},
       {"G-C", "C"},
       {"not(P)", "P-(C-G)"},
       {"P-(C-G)", "C-G"},
       {"not(N)", "N-(P-(C-G))"},
       {"N-(P-(C-G))", "P-(C-G)"},
       {"not(A)", "A-N"},
       {"A-N", "N"}});
}

inline ElementSet bob_hoaf_extension() {
  return {"A", "P", "G", "not(N)", "not(C)", "A-N", "P-(C-G)", "G-C"};
}

inline std::vector<ElementSet> family(const ExtensionSet& e) {
  return e.extensions();
}

}  // namespace afra::testing

#endif  // AFRA_TESTS_FIXTURES_HPP
