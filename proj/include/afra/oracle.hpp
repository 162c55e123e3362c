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

// Brute-force reference implementation. Every definition is evaluated on
// all 2^n subsets of the element universe, with defeat recomputed from
// source and target, sharing no code with the solver paths.

#ifndef AFRA_ORACLE_HPP
#define AFRA_ORACLE_HPP

#include <cstddef>

#include "afra/dung.hpp"
#include "afra/framework.hpp"
#include "afra/semantics.hpp"

namespace afra {

inline constexpr std::size_t kOracleMaxElements = 20;

struct OracleReport {
  SemanticsId semantics;
  ExtensionSet oracle_result;
  ExtensionSet solver_result;
  bool agree;
};

/// Throws TooLargeToEnumerate above kOracleMaxElements.
ExtensionSet brute_force(const Framework& fw, SemanticsId which);
ExtensionSet brute_force(const DungAF& af, SemanticsId which);

/// Runs the oracle and the solver (with `options`) and compares.
OracleReport cross_check(const Framework& fw, SemanticsId which,
                         const SolveOptions& options = {});

}  // namespace afra

#endif  // AFRA_ORACLE_HPP
