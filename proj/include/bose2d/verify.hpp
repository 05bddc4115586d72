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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bose2d {

enum class Relation { Rel, Abs, Le, Ge };

/// One verified statement: lhs against rhs under a relation and tolerance.
struct VerifyCheck {
  std::string suite;
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  Relation relation = Relation::Abs;
  bool pass = false;
};

/// scattering, softpot, bogolattice, freeenergy, entropy, fock.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InvalidArgument for an
/// unknown name. Randomised cases derive from `seed`.
std::vector<VerifyCheck> run_suite(std::string_view suite, std::uint64_t seed);

/// "[PASS] suite/name lhs=... rhs=... tol=... (rel)" per check, then a
/// summary line.
std::string format_checks(const std::vector<VerifyCheck>& checks);
bool all_pass(const std::vector<VerifyCheck>& checks);

}  // namespace bose2d
