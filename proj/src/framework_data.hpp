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

#ifndef AFRA_SRC_FRAMEWORK_DATA_HPP
#define AFRA_SRC_FRAMEWORK_DATA_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "afra/defeat.hpp"
#include "afra/framework.hpp"

namespace afra::detail {

struct FrameworkData {
  std::vector<Framework::Element> elements;  // sorted by name
  std::size_t num_arguments = 0;
  std::size_t num_attacks = 0;

  // Populated once, on first use.
  mutable std::once_flag defeat_once;
  mutable std::unique_ptr<const DefeatGraph> defeat;
};

}  // namespace afra::detail

#endif  // AFRA_SRC_FRAMEWORK_DATA_HPP
