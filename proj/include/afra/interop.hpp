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

// Extended argumentation frameworks (one level of attacks on attacks,
// with their own defeat/reinstatement semantics) and higher-order
// argumentation frameworks (recursive attacks encoded in a classical
// framework through not(.) companions), plus translations into AFRA.

#ifndef AFRA_INTEROP_HPP
#define AFRA_INTEROP_HPP

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "afra/dung.hpp"
#include "afra/framework.hpp"
#include "afra/semantics.hpp"

namespace afra {

// ---------------------------------------------------------------------------
// EAF

using EafPair = std::pair<ElementId, ElementId>;

struct EafDefeater {
  ElementId attacker;
  EafPair attacked;  // a member of r

  friend auto operator<=>(const EafDefeater&, const EafDefeater&) = default;
};

class Eaf {
 public:
  Eaf() = default;

  /// Validates r ⊆ args × args, d ⊆ args × r and the symmetry constraint:
  /// (X,(Y,Z)) and (X',(Z,Y)) in d require X and X' to attack each other.
  /// Throws InvalidEaf.
  static Eaf build(std::vector<ElementId> args, std::vector<EafPair> r,
                   std::vector<EafDefeater> d);

  const std::vector<ElementId>& args() const noexcept { return args_; }
  const std::vector<EafPair>& r() const noexcept { return r_; }
  const std::vector<EafDefeater>& d() const noexcept { return d_; }

  bool has_arg(std::string_view a) const;
  bool attacks(std::string_view a, std::string_view b) const;
  /// Arguments X with (X, (a, b)) in d.
  std::vector<ElementId> defeaters_of(std::string_view a,
                                      std::string_view b) const;

 private:
  std::vector<ElementId> args_;
  std::vector<EafPair> r_;
  std::vector<EafDefeater> d_;
};

/// r-pairs become argument-targeted attacks named att_<src>_<tgt>; each
/// d-pair becomes an attack on the attack for its r-pair. Names get a
/// numeric suffix when they would clash.
Framework eaf_to_afra(const Eaf& eaf);

/// a defeat_S b: (a,b) in r and no member of s attacks (a,b) through d.
bool eaf_defeat_s(const Eaf& eaf, std::string_view a, std::string_view b,
                  const ArgSet& s);
/// Literal reading: every r-pair inside s must be unreciprocated and
/// attacked by a member of s.
bool eaf_is_conflict_free(const Eaf& eaf, const ArgSet& s);
/// Whether c defeat_S b has a reinstatement set. Throws
/// PreconditionViolated unless c defeat_S b holds.
bool eaf_reinstatement_exists(const Eaf& eaf, std::string_view c,
                              std::string_view b, const ArgSet& s);
bool eaf_is_acceptable(const Eaf& eaf, std::string_view a, const ArgSet& s);
ArgSet eaf_characteristic_function(const Eaf& eaf, const ArgSet& s);

/// Supports admissible, complete, preferred, stable and grounded. All but
/// grounded enumerate subsets of args (capped by options.max_enum).
ExtensionSet eaf_semantics(const Eaf& eaf, SemanticsId which,
                           const SolveOptions& options = {});

// ---------------------------------------------------------------------------
// HOAF

struct HoafPair {
  std::string from;
  std::string to;

  friend auto operator<=>(const HoafPair&, const HoafPair&) = default;
};

class Hoaf {
 public:
  Hoaf() = default;

  /// `not_map` sends each coalition argument to its companion. Names are
  /// arbitrary non-empty strings. Throws InvalidHoaf when the structural
  /// constraints fail.
  static Hoaf build(std::vector<std::string> a_c,
                    std::map<std::string, std::string> not_map,
                    std::vector<std::string> a_hash,
                    std::vector<HoafPair> hash);

  const std::vector<std::string>& a_c() const noexcept { return a_c_; }
  const std::vector<std::string>& a_not() const noexcept { return a_not_; }
  const std::map<std::string, std::string>& not_map() const noexcept {
    return not_map_;
  }
  const std::vector<std::string>& a_hash() const noexcept { return a_hash_; }
  const std::vector<HoafPair>& hash() const noexcept { return hash_; }

  /// The classical framework over a_c ∪ a_not ∪ a_hash attacked by hash.
  DungAF represented_af() const;

 private:
  std::vector<std::string> a_c_;
  std::vector<std::string> a_not_;
  std::map<std::string, std::string> not_map_;
  std::vector<std::string> a_hash_;
  std::vector<HoafPair> hash_;
};

/// Inverts the encoding: one attack per a_hash member, sourced at the
/// coalition argument whose companion attacks it. Members whose names are
/// valid identifiers keep them; others are renamed att_<n>. Throws
/// InvalidHoaf.
Framework hoaf_to_afra(const Hoaf& h);

/// Companions are named not(<arg>); attacks keep their ids.
Hoaf afra_to_hoaf(const Framework& fw);

ExtensionSet hoaf_semantics(const Hoaf& h, SemanticsId which,
                            const SolveOptions& options = {});

/// Structural equality up to renaming of attacks: same arguments, and a
/// bijection between attacks preserving source and target.
bool isomorphic_up_to_attack_names(const Framework& a, const Framework& b);

}  // namespace afra

#endif  // AFRA_INTEROP_HPP
