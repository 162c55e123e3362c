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

#include "afra/interop.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bits.hpp"

namespace afra {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

[[noreturn]] void invalid_eaf(const std::string& what) {
  throw Error(ErrorCode::InvalidEaf, what);
}

[[noreturn]] void invalid_hoaf(const std::string& what,
                               const std::string& subject = {}) {
  throw Error(ErrorCode::InvalidHoaf, what, subject);
}

// Picks `base`, or base_2, base_3, ... if taken, and reserves it.
std::string fresh_name(std::set<std::string>& taken, const std::string& base) {
  std::string name = base;
  for (int k = 2; taken.contains(name); ++k) name = base + "_" + std::to_string(k);
  taken.insert(name);
  return name;
}

}  // namespace

// ---------------------------------------------------------------------------
// EAF

Eaf Eaf::build(std::vector<ElementId> args, std::vector<EafPair> r,
               std::vector<EafDefeater> d) {
  Eaf eaf;
  std::sort(args.begin(), args.end());
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!is_valid_element_id(args[i]))
      invalid_eaf("invalid argument name '" + args[i] + "'");
    if (i > 0 && args[i] == args[i - 1])
      invalid_eaf("argument '" + args[i] + "' is declared more than once");
  }
  eaf.args_ = std::move(args);
  sort_unique(r);
  sort_unique(d);
  eaf.r_ = std::move(r);
  eaf.d_ = std::move(d);

  for (const auto& [x, y] : eaf.r_) {
    if (!eaf.has_arg(x) || !eaf.has_arg(y))
      invalid_eaf("attack (" + x + ", " + y + ") mentions an undeclared argument");
  }
  for (const auto& def : eaf.d_) {
    if (!eaf.has_arg(def.attacker))
      invalid_eaf("'" + def.attacker + "' is not an argument");
    if (!eaf.attacks(def.attacked.first, def.attacked.second))
      invalid_eaf("(" + def.attacker + ", (" + def.attacked.first + ", " +
                  def.attacked.second + ")) targets a pair outside R");
  }
  for (const auto& d1 : eaf.d_) {
    for (const auto& d2 : eaf.d_) {
      if (d1.attacked.first != d2.attacked.second ||
          d1.attacked.second != d2.attacked.first)
        continue;
      if (!eaf.attacks(d1.attacker, d2.attacker) ||
          !eaf.attacks(d2.attacker, d1.attacker))
        invalid_eaf("'" + d1.attacker + "' and '" + d2.attacker +
                    "' attack opposite directions of a symmetric attack but "
                    "do not attack each other");
    }
  }
  return eaf;
}

bool Eaf::has_arg(std::string_view a) const {
  return std::binary_search(args_.begin(), args_.end(), a, std::less<>{});
}

bool Eaf::attacks(std::string_view a, std::string_view b) const {
  return std::any_of(r_.begin(), r_.end(), [&](const EafPair& p) {
    return p.first == a && p.second == b;
  });
}

std::vector<ElementId> Eaf::defeaters_of(std::string_view a,
                                         std::string_view b) const {
  std::vector<ElementId> out;
  for (const auto& def : d_)
    if (def.attacked.first == a && def.attacked.second == b)
      out.push_back(def.attacker);
  return out;
}

Framework eaf_to_afra(const Eaf& eaf) {
  std::set<std::string> taken(eaf.args().begin(), eaf.args().end());
  std::map<EafPair, std::string> pair_name;
  std::vector<AttackDecl> attacks;
  for (const auto& [x, y] : eaf.r()) {
    auto id = fresh_name(taken, "att_" + x + "_" + y);
    pair_name[{x, y}] = id;
    attacks.push_back({id, x, y});
  }
  for (const auto& def : eaf.d()) {
    const auto& target = pair_name.at(def.attacked);
    attacks.push_back(
        {fresh_name(taken, "att_" + def.attacker + "_" + target), def.attacker,
         target});
  }
  return build_framework(eaf.args(), std::move(attacks));
}

namespace {

void require_args(const Eaf& eaf, const ArgSet& s) {
  for (const auto& m : s)
    if (!eaf.has_arg(m))
      throw Error(ErrorCode::UnknownElement, "'" + m + "' is not an argument",
                  m);
}

bool defeat_s(const Eaf& eaf, const EafPair& p, const ArgSet& s) {
  if (!eaf.attacks(p.first, p.second)) return false;
  for (const auto& x : eaf.defeaters_of(p.first, p.second))
    if (s.contains(x)) return false;
  return true;
}

bool reinstatable(const Eaf& eaf, const EafPair& query, const ArgSet& s) {
  // Largest candidate reinstatement set: all s-sourced defeat_S pairs,
  // pruned until every D-attacker of a kept pair is itself hit by a kept
  // pair.
  std::vector<EafPair> kept;
  for (const auto& p : eaf.r())
    if (s.contains(p.first) && defeat_s(eaf, p, s)) kept.push_back(p);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<EafPair> next;
    for (const auto& p : kept) {
      bool ok = true;
      for (const auto& y : eaf.defeaters_of(p.first, p.second)) {
        ok = std::any_of(kept.begin(), kept.end(),
                         [&](const EafPair& q) { return q.second == y; });
        if (!ok) break;
      }
      if (ok) next.push_back(p);
      else changed = true;
    }
    kept = std::move(next);
  }
  return std::find(kept.begin(), kept.end(), query) != kept.end();
}

bool acceptable(const Eaf& eaf, const ElementId& a, const ArgSet& s) {
  for (const auto& [b, target] : eaf.r()) {
    if (target != a || !defeat_s(eaf, {b, a}, s)) continue;
    bool defended = false;
    for (const auto& c : s) {
      if (defeat_s(eaf, {c, b}, s) && reinstatable(eaf, {c, b}, s)) {
        defended = true;
        break;
      }
    }
    if (!defended) return false;
  }
  return true;
}

bool conflict_free(const Eaf& eaf, const ArgSet& s) {
  for (const auto& [a, b] : eaf.r()) {
    if (!s.contains(a) || !s.contains(b)) continue;
    if (eaf.attacks(b, a)) return false;
    const auto ds = eaf.defeaters_of(a, b);
    if (std::none_of(ds.begin(), ds.end(),
                     [&](const ElementId& c) { return s.contains(c); }))
      return false;
  }
  return true;
}

}  // namespace

bool eaf_defeat_s(const Eaf& eaf, std::string_view a, std::string_view b,
                  const ArgSet& s) {
  require_args(eaf, ArgSet{std::string(a), std::string(b)});
  require_args(eaf, s);
  return defeat_s(eaf, {std::string(a), std::string(b)}, s);
}

bool eaf_is_conflict_free(const Eaf& eaf, const ArgSet& s) {
  require_args(eaf, s);
  return conflict_free(eaf, s);
}

bool eaf_reinstatement_exists(const Eaf& eaf, std::string_view c,
                              std::string_view b, const ArgSet& s) {
  if (!eaf_defeat_s(eaf, c, b, s))
    throw Error(ErrorCode::PreconditionViolated,
                std::string(c) + " does not defeat_S " + std::string(b));
  return reinstatable(eaf, {std::string(c), std::string(b)}, s);
}

bool eaf_is_acceptable(const Eaf& eaf, std::string_view a, const ArgSet& s) {
  require_args(eaf, ArgSet{std::string(a)});
  require_args(eaf, s);
  return acceptable(eaf, std::string(a), s);
}

ArgSet eaf_characteristic_function(const Eaf& eaf, const ArgSet& s) {
  require_args(eaf, s);
  std::vector<ElementId> out;
  for (const auto& a : eaf.args())
    if (acceptable(eaf, a, s)) out.push_back(a);
  return ArgSet(std::move(out));
}

ExtensionSet eaf_semantics(const Eaf& eaf, SemanticsId which,
                           const SolveOptions& options) {
  if (which == SemanticsId::grounded) {
    // Union of the iterates from the empty set. The function is not
    // monotonic in general, so stop at the first repeated iterate.
    std::vector<ArgSet> seen{ArgSet{}};
    ArgSet acc;
    for (;;) {
      auto next = eaf_characteristic_function(eaf, seen.back());
      acc = acc.united(next);
      if (std::find(seen.begin(), seen.end(), next) != seen.end()) break;
      seen.push_back(std::move(next));
    }
    return ExtensionSet(which, {acc});
  }
  if (which == SemanticsId::semi_stable || which == SemanticsId::ideal)
    throw Error(ErrorCode::PreconditionViolated,
                std::string(to_string(which)) +
                    " is not defined for extended argumentation frameworks");

  const auto& args = eaf.args();
  detail::require_enumerable(args.size(), options.max_enum);
  detail::Deadline deadline(options.timeout);

  std::vector<ArgSet> cf, adm, comp, stab;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << args.size());
       ++mask) {
    deadline.check();
    std::vector<ElementId> members;
    for (std::size_t i = 0; i < args.size(); ++i)
      if (mask >> i & 1) members.push_back(args[i]);
    ArgSet s(std::move(members));
    if (!conflict_free(eaf, s)) continue;
    cf.push_back(s);
    const auto f = eaf_characteristic_function(eaf, s);
    const bool is_adm = s.is_subset_of(f);
    if (is_adm) adm.push_back(s);
    if (is_adm && f.is_subset_of(s)) comp.push_back(s);
    bool is_stable = true;
    for (const auto& b : args) {
      if (s.contains(b)) continue;
      is_stable = std::any_of(s.begin(), s.end(), [&](const ElementId& a) {
        return defeat_s(eaf, {a, b}, s);
      });
      if (!is_stable) break;
    }
    if (is_stable) stab.push_back(s);
  }

  switch (which) {
    case SemanticsId::conflict_free: return ExtensionSet(which, cf);
    case SemanticsId::admissible: return ExtensionSet(which, adm);
    case SemanticsId::complete: return ExtensionSet(which, comp);
    case SemanticsId::stable: return ExtensionSet(which, stab);
    case SemanticsId::preferred: {
      std::vector<ArgSet> pref;
      for (const auto& s : adm) {
        bool dominated = std::any_of(adm.begin(), adm.end(), [&](const ArgSet& t) {
          return t != s && s.is_subset_of(t);
        });
        if (!dominated) pref.push_back(s);
      }
      return ExtensionSet(which, pref);
    }
    default:
      break;
  }
  return ExtensionSet(which, {});  // unreachable
}

// ---------------------------------------------------------------------------
// HOAF

Hoaf Hoaf::build(std::vector<std::string> a_c,
                 std::map<std::string, std::string> not_map,
                 std::vector<std::string> a_hash, std::vector<HoafPair> hash) {
  Hoaf h;
  sort_unique(a_c);
  sort_unique(a_hash);
  sort_unique(hash);

  std::set<std::string> names;
  auto claim = [&](const std::string& n) {
    if (n.empty()) invalid_hoaf("element names must be non-empty");
    if (!names.insert(n).second)
      invalid_hoaf("'" + n + "' is used more than once", n);
  };
  for (const auto& a : a_c) claim(a);
  if (not_map.size() != a_c.size())
    invalid_hoaf("not must map every coalition argument exactly once");
  for (const auto& a : a_c) {
    auto it = not_map.find(a);
    if (it == not_map.end())
      invalid_hoaf("coalition argument '" + a + "' has no not companion", a);
    claim(it->second);
    h.a_not_.push_back(it->second);
  }
  std::sort(h.a_not_.begin(), h.a_not_.end());
  for (const auto& x : a_hash) claim(x);

  auto in = [](const std::vector<std::string>& v, const std::string& x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  std::map<std::string, std::string> not_inverse;
  for (const auto& [a, b] : not_map) not_inverse[b] = a;

  for (const auto& [x, y] : hash) {
    const bool ok = (in(a_c, x) && in(h.a_not_, y)) ||
                    (in(h.a_not_, x) && in(a_hash, y)) ||
                    (in(a_hash, x) && in(a_c, y)) ||
                    (in(a_hash, x) && in(a_hash, y));
    if (!ok) invalid_hoaf("pair (" + x + ", " + y + ") is not allowed in #", x);
    if (in(a_c, x) && not_map.at(x) != y)
      invalid_hoaf("'" + x + "' may only attack its own not companion", x);
  }
  for (const auto& a : a_c) {
    if (!std::binary_search(hash.begin(), hash.end(), HoafPair{a, not_map.at(a)}))
      invalid_hoaf("missing pair (" + a + ", " + not_map.at(a) + ")", a);
  }
  for (const auto& x : a_hash) {
    std::size_t preds = 0, succs = 0;
    for (const auto& [from, to] : hash) {
      if (to == x && in(h.a_not_, from)) ++preds;
      if (from == x) ++succs;
    }
    if (preds != 1)
      invalid_hoaf("'" + x + "' needs exactly one not(.) predecessor", x);
    if (succs != 1) invalid_hoaf("'" + x + "' needs exactly one target", x);
  }

  h.a_c_ = std::move(a_c);
  h.not_map_ = std::move(not_map);
  h.a_hash_ = std::move(a_hash);
  h.hash_ = std::move(hash);
  return h;
}

DungAF Hoaf::represented_af() const {
  std::vector<ElementId> args;
  args.insert(args.end(), a_c_.begin(), a_c_.end());
  args.insert(args.end(), a_not_.begin(), a_not_.end());
  args.insert(args.end(), a_hash_.begin(), a_hash_.end());
  std::vector<DungAttack> pairs;
  for (const auto& p : hash_) pairs.emplace_back(p.from, p.to);
  return DungAF::build(std::move(args), std::move(pairs));
}

Framework hoaf_to_afra(const Hoaf& h) {
  for (const auto& a : h.a_c())
    if (!is_valid_element_id(a))
      invalid_hoaf("coalition argument '" + a + "' is not a valid identifier",
                   a);
  std::map<std::string, std::string> not_inverse;
  for (const auto& [a, b] : h.not_map()) not_inverse[b] = a;

  std::set<std::string> taken(h.a_c().begin(), h.a_c().end());
  for (const auto& x : h.a_hash())
    if (is_valid_element_id(x)) taken.insert(x);

  std::map<std::string, std::string> attack_id;
  std::size_t counter = 0;
  for (const auto& x : h.a_hash()) {
    if (is_valid_element_id(x)) {
      attack_id[x] = x;
    } else {
      std::string id;
      do id = "att_" + std::to_string(++counter);
      while (taken.contains(id));
      taken.insert(id);
      attack_id[x] = id;
    }
  }

  std::vector<AttackDecl> attacks;
  for (const auto& x : h.a_hash()) {
    std::string source, target;
    for (const auto& [from, to] : h.hash()) {
      if (to == x && not_inverse.contains(from)) source = not_inverse.at(from);
      if (from == x) target = to;
    }
    auto is_c = std::binary_search(h.a_c().begin(), h.a_c().end(), target);
    attacks.push_back(
        {attack_id.at(x), source, is_c ? target : attack_id.at(target)});
  }
  try {
    return build_framework(h.a_c(), std::move(attacks));
  } catch (const Error& e) {
    invalid_hoaf(std::string("representation cannot be resolved: ") + e.what(),
                 e.subject());
  }
}

Hoaf afra_to_hoaf(const Framework& fw) {
  std::map<std::string, std::string> not_map;
  std::vector<HoafPair> hash;
  const auto args = fw.arguments();
  for (const auto& a : args) {
    not_map[a] = "not(" + a + ")";
    hash.push_back({a, not_map[a]});
  }
  std::vector<std::string> a_hash;
  for (const auto& at : fw.attacks()) {
    a_hash.push_back(at.id);
    hash.push_back({not_map.at(at.source), at.id});
    hash.push_back({at.id, at.target.id});
  }
  return Hoaf::build(args, std::move(not_map), std::move(a_hash),
                     std::move(hash));
}

ExtensionSet hoaf_semantics(const Hoaf& h, SemanticsId which,
                            const SolveOptions& options) {
  return d_semantics(h.represented_af(), which, options);
}

bool isomorphic_up_to_attack_names(const Framework& a, const Framework& b) {
  if (a.arguments() != b.arguments() || a.num_attacks() != b.num_attacks())
    return false;
  const auto xs = a.attacks();
  const auto ys = b.attacks();

  // Map attacks in order of nesting depth so targets are mapped first.
  auto depth_order = [](const Framework& fw, const std::vector<Attack>& at) {
    std::vector<std::size_t> depth(at.size(), 0);
    std::vector<std::size_t> order(at.size());
    for (std::size_t i = 0; i < at.size(); ++i) {
      order[i] = i;
      auto t = at[i].target;
      while (t.kind == ElementKind::attack) {
        ++depth[i];
        t = trg(fw, t.id);
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto l, auto r) { return depth[l] < depth[r]; });
    return order;
  };
  const auto order = depth_order(a, xs);

  std::map<std::string, std::size_t> y_index;
  for (std::size_t j = 0; j < ys.size(); ++j) y_index[ys[j].id] = j;
  std::map<std::string, std::string> image;  // attack id in a -> id in b
  std::vector<bool> used(ys.size(), false);

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const auto& x = xs[order[k]];
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const auto& y = ys[j];
      if (used[j] || y.source != x.source || y.target.kind != x.target.kind)
        continue;
      if (x.target.kind == ElementKind::argument) {
        if (y.target.id != x.target.id) continue;
      } else {
        auto it = image.find(x.target.id);
        if (it == image.end() || it->second != y.target.id) continue;
      }
      used[j] = true;
      image[x.id] = y.id;
      if (assign(k + 1)) return true;
      image.erase(x.id);
      used[j] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace afra
