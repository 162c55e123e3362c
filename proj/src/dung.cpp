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

#include "afra/dung.hpp"

#include <algorithm>

#include "afra/defeat.hpp"
#include "bits.hpp"

namespace afra {

using detail::Bits;

DungAF DungAF::build(std::vector<ElementId> arguments,
                     std::vector<DungAttack> attacks) {
  DungAF af;
  std::sort(arguments.begin(), arguments.end());
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (arguments[i].empty())
      throw Error(ErrorCode::InvalidId, "argument names must be non-empty");
    if (i > 0 && arguments[i] == arguments[i - 1])
      throw Error(ErrorCode::DuplicateId,
                  "argument '" + arguments[i] + "' is declared more than once",
                  arguments[i]);
  }
  af.arguments_ = std::move(arguments);

  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
  const auto n = af.arguments_.size();
  af.attackers_.resize(n);
  af.attacked_.resize(n);
  for (const auto& [from, to] : attacks) {
    auto f = af.index_of(from);
    auto t = af.index_of(to);
    if (!f || !t) {
      const auto& missing = f ? to : from;
      throw Error(ErrorCode::UnknownElement,
                  "attack (" + from + ", " + to + ") mentions undeclared '" +
                      missing + "'",
                  missing);
    }
    af.attackers_[*t].push_back(*f);
    af.attacked_[*f].push_back(*t);
  }
  af.attacks_ = std::move(attacks);
  return af;
}

std::optional<std::uint32_t> DungAF::index_of(std::string_view name) const {
  auto it = std::lower_bound(arguments_.begin(), arguments_.end(), name,
                             std::less<>{});
  if (it == arguments_.end() || *it != name) return std::nullopt;
  return static_cast<std::uint32_t>(it - arguments_.begin());
}

bool DungAF::attacks(std::string_view from, std::string_view to) const {
  auto f = index_of(from);
  auto t = index_of(to);
  if (!f || !t) return false;
  const auto& v = attacked_[*f];
  return std::find(v.begin(), v.end(), *t) != v.end();
}

namespace {

Bits to_bits(const DungAF& af, const ArgSet& u) {
  Bits b(af.size());
  for (const auto& m : u) {
    auto i = af.index_of(m);
    if (!i)
      throw Error(ErrorCode::UnknownElement,
                  "'" + m + "' is not an argument of the framework", m);
    b.set(*i);
  }
  return b;
}

ArgSet to_args(const DungAF& af, const Bits& b) {
  return detail::to_element_set(
      b, [&](std::uint32_t i) { return af.arguments()[i]; });
}

// Everything attacked by some member of u.
Bits plus(const DungAF& af, const Bits& u) {
  Bits out(af.size());
  for (auto i = u.find_first(); i != Bits::npos; i = u.find_next(i))
    for (auto t : af.attacked_by()[i]) out.set(t);
  return out;
}

bool conflict_free(const DungAF& af, const Bits& u) {
  return !plus(af, u).intersects(u);
}

bool defended(const DungAF& af, std::uint32_t a, const Bits& u_plus) {
  for (auto b : af.attackers_of()[a])
    if (!u_plus.test(b)) return false;
  return true;
}

Bits characteristic(const DungAF& af, const Bits& u) {
  const auto up = plus(af, u);
  Bits out(af.size());
  for (std::uint32_t a = 0; a < af.size(); ++a)
    if (defended(af, a, up)) out.set(a);
  return out;
}

Bits grounded(const DungAF& af) {
  Bits cur(af.size());
  for (;;) {
    auto next = characteristic(af, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

// Complete labellings by branch-and-propagate. Each complete labelling
// corresponds to exactly one complete extension (its IN part).
class LabellingSearch {
 public:
  enum Label : std::uint8_t { none, in, out, undec };

  LabellingSearch(const DungAF& af, detail::Deadline& deadline)
      : af_(af), deadline_(deadline) {}

  std::vector<Bits> run() {
    std::vector<std::uint8_t> lab(af_.size(), none);
    search(lab);
    return std::move(found_);
  }

 private:
  bool propagate(std::vector<std::uint8_t>& lab) const {
    const auto& attackers = af_.attackers_of();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t a = 0; a < af_.size(); ++a) {
        std::size_t n_in = 0, n_out = 0, n_undec = 0, n_none = 0;
        for (auto b : attackers[a]) {
          switch (lab[b]) {
            case in: ++n_in; break;
            case out: ++n_out; break;
            case undec: ++n_undec; break;
            default: ++n_none; break;
          }
        }
        switch (lab[a]) {
          case none:
            if (n_in > 0) {
              lab[a] = out;
              changed = true;
            } else if (n_out == attackers[a].size()) {
              lab[a] = in;
              changed = true;
            }
            break;
          case in:
            if (n_in > 0 || n_undec > 0) return false;
            if (n_none > 0) {
              for (auto b : attackers[a])
                if (lab[b] == none) lab[b] = out;
              changed = true;
            }
            break;
          case out:
            if (n_in == 0 && n_none == 0) return false;
            if (n_in == 0 && n_none == 1) {
              for (auto b : attackers[a])
                if (lab[b] == none) lab[b] = in;
              changed = true;
            }
            break;
          case undec:
            if (n_in > 0) return false;
            if (n_undec == 0 && n_none == 0) return false;
            break;
        }
      }
    }
    return true;
  }

  void search(std::vector<std::uint8_t>& lab) {
    deadline_.check();
    if (!propagate(lab)) return;
    auto open = std::find(lab.begin(), lab.end(), none);
    if (open == lab.end()) {
      Bits ext(af_.size());
      for (std::uint32_t a = 0; a < af_.size(); ++a)
        if (lab[a] == in) ext.set(a);
      found_.push_back(std::move(ext));
      return;
    }
    const auto pos = open - lab.begin();
    for (auto choice : {in, out, undec}) {
      auto next = lab;
      next[pos] = choice;
      search(next);
    }
  }

  const DungAF& af_;
  detail::Deadline& deadline_;
  std::vector<Bits> found_;
};

// Subsets that are conflict-free (and optionally admissible), by
// backtracking in index order with conflict pruning.
std::vector<Bits> enumerate_subsets(const DungAF& af, bool admissible_only,
                                    detail::Deadline& deadline) {
  const auto n = static_cast<std::uint32_t>(af.size());
  std::vector<Bits> out;
  Bits cur(n);
  auto conflicts = [&](std::uint32_t i) {
    for (auto t : af.attacked_by()[i])
      if (t == i || cur.test(t)) return true;
    for (auto b : af.attackers_of()[i])
      if (cur.test(b)) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::uint32_t i) -> void {
    deadline.check();
    if (i == n) {
      if (admissible_only) {
        const auto up = plus(af, cur);
        for (auto a = cur.find_first(); a != Bits::npos; a = cur.find_next(a))
          if (!defended(af, static_cast<std::uint32_t>(a), up)) return;
      }
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

// Greatest admissible subset of `candidate`: repeatedly drop members that
// are in conflict with the set or not defended by it.
Bits greatest_admissible_subset(const DungAF& af, Bits candidate) {
  for (;;) {
    const auto up = plus(af, candidate);
    Bits keep = candidate;
    for (auto a = candidate.find_first(); a != Bits::npos;
         a = candidate.find_next(a)) {
      const auto ai = static_cast<std::uint32_t>(a);
      bool in_conflict = up.test(ai);
      if (!in_conflict)
        for (auto t : af.attacked_by()[ai])
          if (candidate.test(t)) in_conflict = true;
      if (in_conflict || !defended(af, ai, up)) keep.reset(ai);
    }
    if (keep == candidate) return candidate;
    candidate = std::move(keep);
  }
}

ExtensionSet make_result(const DungAF& af, SemanticsId which,
                         const std::vector<Bits>& sets) {
  std::vector<ElementSet> exts;
  exts.reserve(sets.size());
  for (const auto& s : sets) exts.push_back(to_args(af, s));
  return ExtensionSet(which, std::move(exts));
}

Bits range_bits(const DungAF& af, const Bits& u) { return u | plus(af, u); }

}  // namespace

bool d_is_conflict_free(const DungAF& af, const ArgSet& u) {
  return conflict_free(af, to_bits(af, u));
}

bool d_is_acceptable(const DungAF& af, std::string_view argument,
                     const ArgSet& u) {
  auto a = af.index_of(argument);
  if (!a)
    throw Error(ErrorCode::UnknownElement,
                "'" + std::string(argument) + "' is not an argument",
                std::string(argument));
  return defended(af, *a, plus(af, to_bits(af, u)));
}

ArgSet d_characteristic_function(const DungAF& af, const ArgSet& u) {
  return to_args(af, characteristic(af, to_bits(af, u)));
}

bool d_is_admissible(const DungAF& af, const ArgSet& u) {
  const auto b = to_bits(af, u);
  return conflict_free(af, b) && b.is_subset_of(characteristic(af, b));
}

ArgSet d_range(const DungAF& af, const ArgSet& u) {
  return to_args(af, range_bits(af, to_bits(af, u)));
}

ExtensionSet d_semantics(const DungAF& af, SemanticsId which,
                         const SolveOptions& options) {
  detail::Deadline deadline(options.timeout);
  switch (which) {
    case SemanticsId::grounded:
      return make_result(af, which, {grounded(af)});
    case SemanticsId::admissible:
    case SemanticsId::conflict_free:
      detail::require_enumerable(af.size(), options.max_enum);
      return make_result(
          af, which,
          enumerate_subsets(af, which == SemanticsId::admissible, deadline));
    default:
      break;
  }

  const auto complete = LabellingSearch(af, deadline).run();
  switch (which) {
    case SemanticsId::complete:
      return make_result(af, which, complete);
    case SemanticsId::preferred:
      return make_result(af, which, detail::maximal_sets(complete));
    case SemanticsId::stable: {
      std::vector<Bits> stable;
      for (const auto& c : complete)
        if (range_bits(af, c).all()) stable.push_back(c);
      return make_result(af, which, stable);
    }
    case SemanticsId::semi_stable: {
      std::vector<Bits> ranges;
      for (const auto& c : complete) ranges.push_back(range_bits(af, c));
      std::vector<Bits> semi;
      for (auto i : detail::maximal_by_key(ranges)) semi.push_back(complete[i]);
      return make_result(af, which, semi);
    }
    case SemanticsId::ideal: {
      Bits common(af.size());
      common.set();
      for (const auto& p : detail::maximal_sets(complete)) common &= p;
      return make_result(af, which, {greatest_admissible_subset(af, common)});
    }
    default:
      break;
  }
  return make_result(af, which, {});  // unreachable
}

DungAF flatten(const Framework& fw) {
  std::vector<ElementId> args;
  args.reserve(fw.size());
  for (const auto& e : fw.elements()) args.push_back(e.name);
  std::vector<DungAttack> pairs;
  for (const auto& e : defeat_relation(fw))
    pairs.emplace_back(e.attacker, e.victim);
  return DungAF::build(std::move(args), std::move(pairs));
}

DungAF as_dung(const Framework& fw) {
  if (!is_plain_af(fw))
    throw Error(ErrorCode::NotPlainAF,
                "framework has attacks targeting attacks");
  std::vector<DungAttack> pairs;
  for (const auto& a : fw.attacks()) pairs.emplace_back(a.source, a.target.id);
  return DungAF::build(fw.arguments(), std::move(pairs));
}

ElementSet lift(const Framework& fw, const ArgSet& u) {
  for (const auto& m : u) {
    if (!fw.is_argument(m))
      throw Error(ErrorCode::UnknownElement,
                  "'" + m + "' is not an argument of the framework", m);
  }
  std::vector<ElementId> out(u.begin(), u.end());
  for (const auto& a : fw.attacks())
    if (u.contains(a.source)) out.push_back(a.id);
  return ElementSet(std::move(out));
}

bool check_af_correspondence(const Framework& fw, SemanticsId which,
                             const SolveOptions& options) {
  if (which == SemanticsId::admissible || which == SemanticsId::conflict_free)
    throw Error(ErrorCode::PreconditionViolated,
                "the lift correspondence covers the six extension semantics");
  const auto af = as_dung(fw);
  auto ours = solve(fw, which, options).extensions();
  std::vector<ElementSet> lifted;
  const auto theirs = d_semantics(af, which, options);
  for (const auto& u : theirs.extensions()) lifted.push_back(lift(fw, u));
  std::sort(ours.begin(), ours.end());
  std::sort(lifted.begin(), lifted.end());
  return ours == lifted;
}

bool check_flatten_correspondence(const Framework& fw, SemanticsId which,
                                  const SolveOptions& options) {
  auto native = options;
  native.route = Route::native;
  const auto ours = solve(fw, which, native);
  const auto theirs = d_semantics(flatten(fw), which, options);
  return ours.extensions() == theirs.extensions();
}

}  // namespace afra
