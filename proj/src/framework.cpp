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

#include "afra/framework.hpp"

#include <algorithm>
#include <iterator>

#include "framework_data.hpp"

namespace afra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingSource: return "DanglingSource";
    case ErrorCode::DanglingTarget: return "DanglingTarget";
    case ErrorCode::CyclicTargetChain: return "CyclicTargetChain";
    case ErrorCode::UnknownAttack: return "UnknownAttack";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotAnAttack: return "NotAnAttack";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::NotPlainAF: return "NotPlainAF";
    case ErrorCode::InvalidEaf: return "InvalidEaf";
    case ErrorCode::InvalidHoaf: return "InvalidHoaf";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

bool is_valid_element_id(std::string_view name) noexcept {
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (name.empty() || !alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) {
    return alpha(c) || digit(c) || c == '_';
  });
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::initializer_list<ElementId> members)
    : ElementSet(std::vector<ElementId>(members)) {}

ElementSet::ElementSet(std::vector<ElementId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool ElementSet::contains(std::string_view name) const {
  return std::binary_search(members_.begin(), members_.end(), name,
                            std::less<>{});
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ElementSet ElementSet::united(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  ElementSet result;
  result.members_ = std::move(out);
  return result;
}

ElementSet ElementSet::intersected(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  ElementSet result;
  result.members_ = std::move(out);
  return result;
}

std::string to_string(const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : set) {
    if (!first) out += ", ";
    out += m;
    first = false;
  }
  out += "}";
  return out;
}

// ---------------------------------------------------------------------------
// Framework

Framework::Framework()
    : data_(std::make_shared<const detail::FrameworkData>()) {}

Framework::Framework(std::shared_ptr<const detail::FrameworkData> data)
    : data_(std::move(data)) {}

std::size_t Framework::size() const noexcept { return data_->elements.size(); }
std::size_t Framework::num_arguments() const noexcept {
  return data_->num_arguments;
}
std::size_t Framework::num_attacks() const noexcept {
  return data_->num_attacks;
}

std::span<const Framework::Element> Framework::elements() const noexcept {
  return data_->elements;
}

std::optional<std::uint32_t> Framework::index_of(std::string_view name) const {
  const auto& els = data_->elements;
  auto it = std::lower_bound(
      els.begin(), els.end(), name,
      [](const Element& e, std::string_view n) { return e.name < n; });
  if (it == els.end() || it->name != name) return std::nullopt;
  return static_cast<std::uint32_t>(it - els.begin());
}

bool Framework::is_argument(std::string_view name) const {
  auto i = index_of(name);
  return i && element(*i).kind == ElementKind::argument;
}

bool Framework::is_attack(std::string_view name) const {
  auto i = index_of(name);
  return i && element(*i).kind == ElementKind::attack;
}

std::vector<ElementId> Framework::arguments() const {
  std::vector<ElementId> out;
  out.reserve(num_arguments());
  for (const auto& e : data_->elements)
    if (e.kind == ElementKind::argument) out.push_back(e.name);
  return out;
}

std::vector<Attack> Framework::attacks() const {
  std::vector<Attack> out;
  out.reserve(num_attacks());
  const auto& els = data_->elements;
  for (const auto& e : els) {
    if (e.kind != ElementKind::attack) continue;
    const auto& t = els[e.target];
    out.push_back({e.name, els[e.source].name, {t.kind, t.name}});
  }
  return out;
}

ElementSet Framework::all_elements() const {
  std::vector<ElementId> names;
  names.reserve(size());
  for (const auto& e : data_->elements) names.push_back(e.name);
  return ElementSet(std::move(names));
}

Framework build_framework(std::vector<ElementId> arguments,
                          std::vector<AttackDecl> attacks) {
  auto data = std::make_shared<detail::FrameworkData>();
  auto& els = data->elements;
  els.reserve(arguments.size() + attacks.size());

  for (auto& a : arguments) {
    if (!is_valid_element_id(a))
      throw Error(ErrorCode::InvalidId, "invalid argument name '" + a + "'", a);
    els.push_back({std::move(a), ElementKind::argument});
  }
  for (const auto& at : attacks) {
    if (!is_valid_element_id(at.id))
      throw Error(ErrorCode::InvalidId, "invalid attack name '" + at.id + "'",
                  at.id);
    els.push_back({at.id, ElementKind::attack});
  }
  std::sort(els.begin(), els.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });
  for (std::size_t i = 1; i < els.size(); ++i) {
    if (els[i].name == els[i - 1].name)
      throw Error(ErrorCode::DuplicateId,
                  "name '" + els[i].name + "' is declared more than once",
                  els[i].name);
  }
  data->num_arguments = arguments.size();
  data->num_attacks = attacks.size();

  auto find = [&](std::string_view name) -> std::optional<std::uint32_t> {
    auto it = std::lower_bound(
        els.begin(), els.end(), name,
        [](const auto& e, std::string_view n) { return e.name < n; });
    if (it == els.end() || it->name != name) return std::nullopt;
    return static_cast<std::uint32_t>(it - els.begin());
  };

  for (const auto& at : attacks) {
    auto self = *find(at.id);
    auto s = find(at.source);
    if (!s || els[*s].kind != ElementKind::argument)
      throw Error(ErrorCode::DanglingSource,
                  "source '" + at.source + "' of attack '" + at.id +
                      "' is not an argument",
                  at.id);
    auto t = find(at.target);
    if (!t)
      throw Error(ErrorCode::DanglingTarget,
                  "target '" + at.target + "' of attack '" + at.id +
                      "' is not declared",
                  at.id);
    els[self].source = *s;
    els[self].target = *t;
  }

  // Every target chain must bottom out at an argument.
  enum : std::uint8_t { unseen, active, done };
  std::vector<std::uint8_t> state(els.size(), unseen);
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    if (els[i].kind != ElementKind::attack || state[i] == done) continue;
    std::vector<std::uint32_t> chain;
    std::uint32_t cur = i;
    while (els[cur].kind == ElementKind::attack && state[cur] == unseen) {
      state[cur] = active;
      chain.push_back(cur);
      cur = els[cur].target;
    }
    if (els[cur].kind == ElementKind::attack && state[cur] == active)
      throw Error(ErrorCode::CyclicTargetChain,
                  "target chain of attack '" + els[i].name +
                      "' does not terminate at an argument",
                  els[i].name);
    for (auto c : chain) state[c] = done;
  }

  return Framework(std::move(data));
}

namespace {

const Framework::Element& attack_element(const Framework& fw,
                                         std::string_view attack) {
  auto i = fw.index_of(attack);
  if (!i || fw.element(*i).kind != ElementKind::attack)
    throw Error(ErrorCode::UnknownAttack,
                "'" + std::string(attack) + "' is not an attack",
                std::string(attack));
  return fw.element(*i);
}

}  // namespace

ElementId src(const Framework& fw, std::string_view attack) {
  return fw.element(attack_element(fw, attack).source).name;
}

ElementRef trg(const Framework& fw, std::string_view attack) {
  const auto& t = fw.element(attack_element(fw, attack).target);
  return {t.kind, t.name};
}

bool is_plain_af(const Framework& fw) noexcept {
  for (const auto& e : fw.elements()) {
    if (e.kind == ElementKind::attack &&
        fw.element(e.target).kind != ElementKind::argument)
      return false;
  }
  return true;
}

void require_members(const Framework& fw, const ElementSet& set) {
  for (const auto& m : set) {
    if (!fw.contains(m))
      throw Error(ErrorCode::UnknownElement,
                  "'" + m + "' is not an element of the framework", m);
  }
}

}  // namespace afra
