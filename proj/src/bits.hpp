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

#ifndef AFRA_SRC_BITS_HPP
#define AFRA_SRC_BITS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "afra/error.hpp"
#include "afra/framework.hpp"
#include "afra/semantics.hpp"

namespace afra::detail {

using Bits = boost::dynamic_bitset<>;

template <typename NameOf>
ElementSet to_element_set(const Bits& bits, NameOf&& name_of) {
  std::vector<ElementId> names;
  names.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
    names.push_back(name_of(static_cast<std::uint32_t>(i)));
  return ElementSet(std::move(names));
}

/// Drops every set that has a proper superset in the list.
inline std::vector<Bits> maximal_sets(const std::vector<Bits>& sets) {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      dominated = i != j && sets[i] != sets[j] && sets[i].is_subset_of(sets[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

/// Indices of the sets whose key is maximal w.r.t. inclusion.
inline std::vector<std::size_t> maximal_by_key(const std::vector<Bits>& keys) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < keys.size() && !dominated; ++j)
      dominated = keys[i].is_proper_subset_of(keys[j]);
    if (!dominated) out.push_back(i);
  }
  return out;
}

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> budget) {
    if (budget) end_ = std::chrono::steady_clock::now() + *budget;
  }

  // Polls the clock every 1024 calls.
  void check() {
    if (!end_ || (++ticks_ & 1023u) != 0) return;
    if (std::chrono::steady_clock::now() > *end_)
      throw Error(ErrorCode::TooLargeToEnumerate,
                  "enumeration exceeded the configured timeout");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  std::uint32_t ticks_ = 0;
};

inline void require_enumerable(std::size_t size, std::size_t bound) {
  if (size > bound)
    throw Error(ErrorCode::TooLargeToEnumerate,
                "framework has " + std::to_string(size) +
                    " elements; exhaustive enumeration is capped at " +
                    std::to_string(bound));
}

}  // namespace afra::detail

#endif  // AFRA_SRC_BITS_HPP
