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

#include <utility>

namespace bose2d::special {

/// Bessel J0 with uniform absolute accuracy near 1e-15 on [0, inf).
double bessel_j0(double x);
double bessel_j1(double x);
/// (J0(x), J1(x)) from one evaluation.
std::pair<double, double> bessel_j01(double x);

/// k-th positive zero of J0, k >= 1.
double bessel_j0_zero(int k);

/// Dilogarithm Li2(z) = sum_k z^k / k^2 on [0, 1].
double dilog(double z);

/// log(1 - exp(-x)) for x > 0 without cancellation.
double log1mexp(double x);

}  // namespace bose2d::special
