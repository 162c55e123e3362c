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

// Argumentation frameworks with recursive attacks.
//
// A framework holds arguments and named attacks. Every attack has an
// argument as its source and either an argument or another attack as its
// target, so attacks on attacks nest to any depth. Arguments and attacks
// share one namespace; together they form the element universe over which
// extensions range.

#ifndef AFRA_FRAMEWORK_HPP
#define AFRA_FRAMEWORK_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "afra/error.hpp"

namespace afra {

using ElementId = std::string;

/// True iff `name` matches `[A-Za-z][A-Za-z0-9_]*`.
bool is_valid_element_id(std::string_view name) noexcept;

enum class ElementKind : std::uint8_t { argument, attack };

struct ElementRef {
  ElementKind kind;
  ElementId id;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

/// Attack as supplied to build_framework. The target is a bare name and is
/// resolved against the whole declaration list, so forward references work.
struct AttackDecl {
  ElementId id;
  ElementId source;
  ElementId target;
};

/// Attack as stored in a validated framework.
struct Attack {
  ElementId id;
  ElementId source;
  ElementRef target;

  friend bool operator==(const Attack&, const Attack&) = default;
};

/// A sorted, duplicate-free set of element names. Used for mixed sets of
/// arguments and attacks and for argument sets of classical frameworks.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> members);
  explicit ElementSet(std::vector<ElementId> members);

  bool contains(std::string_view name) const;
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const std::vector<ElementId>& members() const noexcept { return members_; }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet united(const ElementSet& other) const;
  ElementSet intersected(const ElementSet& other) const;

  // Lexicographic over the sorted member lists; this is the canonical
  // extension order.
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementId> members_;
};

std::string to_string(const ElementSet& set);

namespace detail {
struct FrameworkData;
}

/// Immutable, validated framework. Cheap to copy; copies share state.
class Framework {
 public:
  static constexpr std::uint32_t npos = UINT32_MAX;

  /// One entry of the element universe, indexed in canonical (name) order.
  struct Element {
    ElementId name;
    ElementKind kind;
    std::uint32_t source = npos;  // attacks only
    std::uint32_t target = npos;  // attacks only
  };

  Framework();

  std::size_t size() const noexcept;  // |arguments| + |attacks|
  std::size_t num_arguments() const noexcept;
  std::size_t num_attacks() const noexcept;

  std::span<const Element> elements() const noexcept;
  const Element& element(std::uint32_t index) const { return elements()[index]; }
  std::optional<std::uint32_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  bool is_argument(std::string_view name) const;
  bool is_attack(std::string_view name) const;

  /// Argument names, sorted.
  std::vector<ElementId> arguments() const;
  /// Attacks, sorted by id.
  std::vector<Attack> attacks() const;

  ElementSet all_elements() const;

  const detail::FrameworkData& data() const noexcept { return *data_; }

 private:
  friend Framework build_framework(std::vector<ElementId>,
                                   std::vector<AttackDecl>);
  explicit Framework(std::shared_ptr<const detail::FrameworkData> data);

  std::shared_ptr<const detail::FrameworkData> data_;
};

/// Validates and canonicalizes a framework.
///
/// Throws Error with DuplicateId, InvalidId, DanglingSource, DanglingTarget
/// or CyclicTargetChain.
Framework build_framework(std::vector<ElementId> arguments,
                          std::vector<AttackDecl> attacks);

/// Source argument of an attack. Throws UnknownAttack.
ElementId src(const Framework& fw, std::string_view attack);
/// Target of an attack. Throws UnknownAttack.
ElementRef trg(const Framework& fw, std::string_view attack);

/// True iff no attack targets another attack.
bool is_plain_af(const Framework& fw) noexcept;

/// Throws UnknownElement unless every member of `set` belongs to `fw`.
void require_members(const Framework& fw, const ElementSet& set);

}  // namespace afra

#endif  // AFRA_FRAMEWORK_HPP
