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

#ifndef AFRA_ERROR_HPP
#define AFRA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace afra {

enum class ErrorCode {
  InvalidId,
  DuplicateId,
  DanglingSource,
  DanglingTarget,
  CyclicTargetChain,
  UnknownAttack,
  UnknownElement,
  NotAnAttack,
  TooLargeToEnumerate,
  NotPlainAF,
  InvalidEaf,
  InvalidHoaf,
  PreconditionViolated,
  SyntaxError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All failures raised by the toolkit. `subject()` names the offending
/// element when there is one, so callers (the parser, mostly) can point at
/// the statement that introduced it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace afra

#endif  // AFRA_ERROR_HPP
