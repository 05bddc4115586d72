// Copyright 2026 The bose2d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bose2d {

enum class ErrorCode {
  DegenerateGas,
  NegativeInput,
  InvalidArgument,
  SolverDivergence,
  NonPositiveLogArgument,
  MeshMismatch,
  MissingScatteringSolution,
  QuadratureNonconvergence,
  NonPositiveDispersion,
  CutoffTooSmall,
  CutoffTooLarge,
  NoCondensateSolution,
  DomainError,
  DimensionMismatch,
  WordTooLong,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The message names the operation that
/// failed so the CLI can report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& where, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + " in " + where + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bose2d
