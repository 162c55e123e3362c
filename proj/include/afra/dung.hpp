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

// Classical (Dung) argumentation frameworks, the flattening of a recursive
// framework into one, and the lift operator relating the two on frameworks
// without attacks on attacks.

#ifndef AFRA_DUNG_HPP
#define AFRA_DUNG_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "afra/framework.hpp"
#include "afra/semantics.hpp"

namespace afra {

using ArgSet = ElementSet;
using DungAttack = std::pair<ElementId, ElementId>;

/// Classical framework. Argument names are arbitrary non-empty strings, so
/// the structure can also hold frameworks represented by higher-order
/// encodings such as "not(A)".
class DungAF {
 public:
  DungAF() = default;

  /// Throws DuplicateId, InvalidId (empty name) or UnknownElement (attack
  /// endpoint not among the arguments).
  static DungAF build(std::vector<ElementId> arguments,
                      std::vector<DungAttack> attacks);

  std::size_t size() const noexcept { return arguments_.size(); }
  const std::vector<ElementId>& arguments() const noexcept {
    return arguments_;
  }
  /// Sorted and duplicate-free.
  const std::vector<DungAttack>& attacks() const noexcept { return attacks_; }
  std::optional<std::uint32_t> index_of(std::string_view name) const;
  bool attacks(std::string_view from, std::string_view to) const;

  const std::vector<std::vector<std::uint32_t>>& attackers_of() const noexcept {
    return attackers_;
  }
  const std::vector<std::vector<std::uint32_t>>& attacked_by() const noexcept {
    return attacked_;
  }

 private:
  std::vector<ElementId> arguments_;
  std::vector<DungAttack> attacks_;
  std::vector<std::vector<std::uint32_t>> attackers_;
  std::vector<std::vector<std::uint32_t>> attacked_;
};

bool d_is_conflict_free(const DungAF& af, const ArgSet& u);
bool d_is_acceptable(const DungAF& af, std::string_view argument,
                     const ArgSet& u);
ArgSet d_characteristic_function(const DungAF& af, const ArgSet& u);
bool d_is_admissible(const DungAF& af, const ArgSet& u);
ArgSet d_range(const DungAF& af, const ArgSet& u);

/// D-extensions of `af`. Complete, preferred, stable and semi-stable are
/// derived from an enumeration of complete labellings (no size cap, only
/// options.timeout); admissible and conflict-free enumerate subsets and are
/// capped by options.max_enum. options.route is ignored.
ExtensionSet d_semantics(const DungAF& af, SemanticsId which,
                         const SolveOptions& options = {});

/// Every element becomes an argument; every defeat becomes an attack.
/// Names are kept verbatim.
DungAF flatten(const Framework& fw);

/// Reads a framework without attacks on attacks as a classical AF over its
/// arguments. Throws NotPlainAF.
DungAF as_dung(const Framework& fw);

/// u together with every attack whose source is in u. Throws
/// UnknownElement unless u consists of arguments of fw.
ElementSet lift(const Framework& fw, const ArgSet& u);

/// Compares the extensions of a plain framework with the lifted
/// D-extensions of the same framework read as a classical AF. Defined for
/// the six extension semantics; throws NotPlainAF or PreconditionViolated.
bool check_af_correspondence(const Framework& fw, SemanticsId which,
                             const SolveOptions& options = {});

/// Compares the extensions of fw, computed on the native route, with the
/// D-extensions of flatten(fw). Defined for all eight semantics.
bool check_flatten_correspondence(const Framework& fw, SemanticsId which,
                                  const SolveOptions& options = {});

}  // namespace afra

#endif  // AFRA_DUNG_HPP
