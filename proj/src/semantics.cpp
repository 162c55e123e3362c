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

#include "afra/semantics.hpp"

#include <algorithm>

#include "afra/defeat.hpp"
#include "afra/dung.hpp"
#include "bits.hpp"

namespace afra {

using detail::Bits;

std::string_view to_string(SemanticsId id) noexcept {
  switch (id) {
    case SemanticsId::complete: return "complete";
    case SemanticsId::grounded: return "grounded";
    case SemanticsId::preferred: return "preferred";
    case SemanticsId::stable: return "stable";
    case SemanticsId::semi_stable: return "semi_stable";
    case SemanticsId::ideal: return "ideal";
    case SemanticsId::admissible: return "admissible";
    case SemanticsId::conflict_free: return "conflict_free";
  }
  return "unknown";
}

std::optional<SemanticsId> parse_semantics(std::string_view name) noexcept {
  for (auto id : kAllSemantics)
    if (to_string(id) == name) return id;
  if (name == "semi-stable") return SemanticsId::semi_stable;
  if (name == "conflict-free") return SemanticsId::conflict_free;
  return std::nullopt;
}

ExtensionSet::ExtensionSet(SemanticsId semantics,
                           std::vector<ElementSet> extensions)
    : semantics_(semantics), extensions_(std::move(extensions)) {
  std::sort(extensions_.begin(), extensions_.end());
  extensions_.erase(std::unique(extensions_.begin(), extensions_.end()),
                    extensions_.end());
}

bool ExtensionSet::contains(const ElementSet& s) const {
  return std::binary_search(extensions_.begin(), extensions_.end(), s);
}

namespace {

// Bitset evaluation of the definitions over Framework::elements() indices.
class Evaluator {
 public:
  explicit Evaluator(const Framework& fw)
      : fw_(fw),
        graph_(defeat_graph(fw)),
        n_(static_cast<std::uint32_t>(fw.size())) {}

  std::size_t size() const noexcept { return n_; }

  Bits bits(const ElementSet& s) const {
    Bits b(n_);
    for (const auto& m : s) {
      auto i = fw_.index_of(m);
      if (!i)
        throw Error(ErrorCode::UnknownElement,
                    "'" + m + "' is not an element of the framework", m);
      b.set(*i);
    }
    return b;
  }

  ElementSet set(const Bits& b) const {
    return detail::to_element_set(
        b, [&](std::uint32_t i) { return fw_.element(i).name; });
  }

  // Elements defeated by some member of s.
  Bits plus(const Bits& s) const {
    Bits out(n_);
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
      for (auto v : graph_.victims[i]) out.set(v);
    return out;
  }

  bool defended(std::uint32_t v, const Bits& s_plus) const {
    for (auto a : graph_.defeaters[v])
      if (!s_plus.test(a)) return false;
    return true;
  }

  Bits characteristic(const Bits& s) const {
    const auto sp = plus(s);
    Bits out(n_);
    for (std::uint32_t v = 0; v < n_; ++v)
      if (defended(v, sp)) out.set(v);
    return out;
  }

  bool conflict_free(const Bits& s) const { return !plus(s).intersects(s); }

  bool admissible(const Bits& s) const {
    const auto sp = plus(s);
    if (sp.intersects(s)) return false;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
      if (!defended(static_cast<std::uint32_t>(i), sp)) return false;
    return true;
  }

  bool complete(const Bits& s) const {
    return conflict_free(s) && characteristic(s) == s;
  }

  Bits range(const Bits& s) const { return s | plus(s); }

  bool stable(const Bits& s) const {
    return conflict_free(s) && range(s).all();
  }

  Bits grounded() const {
    Bits cur(n_);
    for (;;) {
      auto next = characteristic(cur);
      if (next == cur) return cur;
      cur = std::move(next);
    }
  }

  // All conflict-free subsets, by backtracking in index order.
  std::vector<Bits> conflict_free_sets() const {
    std::vector<Bits> out;
    Bits cur(n_);
    auto conflicts = [&](std::uint32_t i) {
      for (auto v : graph_.victims[i])
        if (v == i || cur.test(v)) return true;
      for (auto a : graph_.defeaters[i])
        if (cur.test(a)) return true;
      return false;
    };
    auto rec = [&](auto&& self, std::uint32_t i) -> void {
      if (i == n_) {
        out.push_back(cur);
        return;
      }
      self(self, i + 1);
      if (!conflicts(i)) {
        cur.set(i);
        self(self, i + 1);
        cur.reset(i);
      }
    };
    rec(rec, 0);
    return out;
  }

 private:
  const Framework& fw_;
  const DefeatGraph& graph_;
  std::uint32_t n_;
};

ExtensionSet make_result(const Evaluator& ev, SemanticsId which,
                         const std::vector<Bits>& sets) {
  std::vector<ElementSet> exts;
  exts.reserve(sets.size());
  for (const auto& s : sets) exts.push_back(ev.set(s));
  return ExtensionSet(which, std::move(exts));
}

template <typename Pred>
std::vector<Bits> filter(std::vector<Bits> sets, Pred&& keep) {
  std::erase_if(sets, [&](const Bits& s) { return !keep(s); });
  return sets;
}

ExtensionSet solve_native(const Framework& fw, SemanticsId which,
                          const SolveOptions& options) {
  Evaluator ev(fw);
  if (which == SemanticsId::grounded)
    return make_result(ev, which, {ev.grounded()});

  detail::require_enumerable(ev.size(), options.max_enum);
  const auto cf = ev.conflict_free_sets();
  if (which == SemanticsId::conflict_free) return make_result(ev, which, cf);

  const auto adm = filter(cf, [&](const Bits& s) { return ev.admissible(s); });
  switch (which) {
    case SemanticsId::admissible:
      return make_result(ev, which, adm);
    case SemanticsId::complete:
      return make_result(ev, which,
                         filter(adm, [&](const Bits& s) { return ev.complete(s); }));
    case SemanticsId::preferred:
      return make_result(ev, which, detail::maximal_sets(adm));
    case SemanticsId::stable:
      return make_result(ev, which,
                         filter(cf, [&](const Bits& s) { return ev.stable(s); }));
    case SemanticsId::semi_stable: {
      const auto comp =
          filter(adm, [&](const Bits& s) { return ev.complete(s); });
      std::vector<Bits> ranges;
      for (const auto& c : comp) ranges.push_back(ev.range(c));
      std::vector<Bits> semi;
      for (auto i : detail::maximal_by_key(ranges)) semi.push_back(comp[i]);
      return make_result(ev, which, semi);
    }
    case SemanticsId::ideal: {
      // Largest admissible set contained in every preferred extension.
      Bits common(ev.size());
      common.set();
      for (const auto& p : detail::maximal_sets(adm)) common &= p;
      auto ideal_sets = filter(
          adm, [&](const Bits& s) { return s.is_subset_of(common); });
      return make_result(ev, which, detail::maximal_sets(ideal_sets));
    }
    default:
      break;
  }
  return make_result(ev, which, {});  // unreachable
}

ExtensionSet solve_flattened(const Framework& fw, SemanticsId which,
                             const SolveOptions& options) {
  if (which == SemanticsId::grounded)
    return ExtensionSet(which, {grounded_extension(fw)});
  return d_semantics(flatten(fw), which, options);
}

ElementSet single(const ExtensionSet& result) {
  // Grounded and ideal are unique by construction.
  return result.extensions().front();
}

}  // namespace

bool is_conflict_free(const Framework& fw, const ElementSet& s) {
  Evaluator ev(fw);
  return ev.conflict_free(ev.bits(s));
}

bool is_acceptable(const Framework& fw, std::string_view element,
                   const ElementSet& s) {
  Evaluator ev(fw);
  auto v = fw.index_of(element);
  if (!v)
    throw Error(ErrorCode::UnknownElement,
                "'" + std::string(element) + "' is not an element",
                std::string(element));
  return ev.defended(*v, ev.plus(ev.bits(s)));
}

ElementSet characteristic_function(const Framework& fw, const ElementSet& s) {
  Evaluator ev(fw);
  return ev.set(ev.characteristic(ev.bits(s)));
}

bool is_admissible(const Framework& fw, const ElementSet& s) {
  Evaluator ev(fw);
  return ev.admissible(ev.bits(s));
}

bool is_complete(const Framework& fw, const ElementSet& s) {
  Evaluator ev(fw);
  return ev.complete(ev.bits(s));
}

bool is_stable(const Framework& fw, const ElementSet& s) {
  Evaluator ev(fw);
  return ev.stable(ev.bits(s));
}

ElementSet range(const Framework& fw, const ElementSet& s) {
  Evaluator ev(fw);
  return ev.set(ev.range(ev.bits(s)));
}

ElementSet grounded_extension(const Framework& fw) {
  Evaluator ev(fw);
  return ev.set(ev.grounded());
}

ExtensionSet solve(const Framework& fw, SemanticsId which,
                   const SolveOptions& options) {
  return options.route == Route::native ? solve_native(fw, which, options)
                                        : solve_flattened(fw, which, options);
}

ExtensionSet admissible_sets(const Framework& fw, const SolveOptions& o) {
  detail::require_enumerable(fw.size(), o.max_enum);
  return solve(fw, SemanticsId::admissible, o);
}

ExtensionSet conflict_free_sets(const Framework& fw, const SolveOptions& o) {
  return solve(fw, SemanticsId::conflict_free, o);
}

ExtensionSet complete_extensions(const Framework& fw, const SolveOptions& o) {
  return solve(fw, SemanticsId::complete, o);
}

ExtensionSet preferred_extensions(const Framework& fw, const SolveOptions& o) {
  return solve(fw, SemanticsId::preferred, o);
}

ExtensionSet stable_extensions(const Framework& fw, const SolveOptions& o) {
  return solve(fw, SemanticsId::stable, o);
}

ExtensionSet semi_stable_extensions(const Framework& fw,
                                    const SolveOptions& o) {
  return solve(fw, SemanticsId::semi_stable, o);
}

ElementSet ideal_extension(const Framework& fw, const SolveOptions& o) {
  return single(solve(fw, SemanticsId::ideal, o));
}

}  // namespace afra
