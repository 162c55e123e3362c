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

// Extension semantics over mixed sets of arguments and attacks.
//
// Two routes compute the enumeration semantics:
//
//  - Route::flattened (default) rewrites the framework as a classical AF
//    whose arguments are all elements and whose attacks are the defeats,
//    then runs the labelling-based engine in dung.hpp. No size cap beyond
//    an optional timeout, except for the admissible and conflict-free
//    families which are bounded by SolveOptions::max_enum.
//  - Route::native evaluates the definitions directly on the framework
//    (defeat, acceptability, characteristic function) by searching
//    conflict-free sets. Bounded by SolveOptions::max_enum. Exists so the
//    flattened route can be cross-checked.
//
// Grounded is always computed natively by fixpoint iteration from the
// empty set.

#ifndef AFRA_SEMANTICS_HPP
#define AFRA_SEMANTICS_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "afra/framework.hpp"

namespace afra {

enum class SemanticsId {
  complete,
  grounded,
  preferred,
  stable,
  semi_stable,
  ideal,
  admissible,
  conflict_free,
};

inline constexpr SemanticsId kExtensionSemantics[] = {
    SemanticsId::complete, SemanticsId::grounded,    SemanticsId::preferred,
    SemanticsId::stable,   SemanticsId::semi_stable, SemanticsId::ideal,
};

inline constexpr SemanticsId kAllSemantics[] = {
    SemanticsId::complete,   SemanticsId::grounded,
    SemanticsId::preferred,  SemanticsId::stable,
    SemanticsId::semi_stable, SemanticsId::ideal,
    SemanticsId::admissible, SemanticsId::conflict_free,
};

std::string_view to_string(SemanticsId id) noexcept;
/// Accepts the canonical names plus "semi-stable" and "conflict-free".
std::optional<SemanticsId> parse_semantics(std::string_view name) noexcept;

/// A canonical family of extensions: sorted, duplicate-free.
class ExtensionSet {
 public:
  ExtensionSet(SemanticsId semantics, std::vector<ElementSet> extensions);

  SemanticsId semantics() const noexcept { return semantics_; }
  const std::vector<ElementSet>& extensions() const noexcept {
    return extensions_;
  }
  std::size_t size() const noexcept { return extensions_.size(); }
  bool empty() const noexcept { return extensions_.empty(); }
  bool contains(const ElementSet& s) const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

 private:
  SemanticsId semantics_;
  std::vector<ElementSet> extensions_;
};

enum class Route { flattened, native };

struct SolveOptions {
  static constexpr std::size_t kDefaultMaxEnum = 24;

  Route route = Route::flattened;
  /// Upper bound on |A ∪ R| for exhaustive subset enumeration.
  std::size_t max_enum = kDefaultMaxEnum;
  /// Wall-clock budget for labelling enumeration; exceeding it raises
  /// TooLargeToEnumerate.
  std::optional<std::chrono::milliseconds> timeout;
};

bool is_conflict_free(const Framework& fw, const ElementSet& s);
bool is_acceptable(const Framework& fw, std::string_view element,
                   const ElementSet& s);
ElementSet characteristic_function(const Framework& fw, const ElementSet& s);
bool is_admissible(const Framework& fw, const ElementSet& s);
bool is_complete(const Framework& fw, const ElementSet& s);
bool is_stable(const Framework& fw, const ElementSet& s);
/// s together with everything some member of s defeats.
ElementSet range(const Framework& fw, const ElementSet& s);

ExtensionSet admissible_sets(const Framework& fw, const SolveOptions& = {});
ExtensionSet conflict_free_sets(const Framework& fw, const SolveOptions& = {});
ElementSet grounded_extension(const Framework& fw);
ExtensionSet complete_extensions(const Framework& fw, const SolveOptions& = {});
ExtensionSet preferred_extensions(const Framework& fw,
                                  const SolveOptions& = {});
ExtensionSet stable_extensions(const Framework& fw, const SolveOptions& = {});
ExtensionSet semi_stable_extensions(const Framework& fw,
                                    const SolveOptions& = {});
ElementSet ideal_extension(const Framework& fw, const SolveOptions& = {});

/// Dispatches on `which`. Grounded and ideal come back as a one-member
/// family.
ExtensionSet solve(const Framework& fw, SemanticsId which,
                   const SolveOptions& = {});

}  // namespace afra

#endif  // AFRA_SEMANTICS_HPP
