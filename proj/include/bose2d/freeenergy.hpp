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

#include "bose2d/params.hpp"

namespace bose2d {

/// gamma + 1/4 + log(pi) / 2.
double ground_constant();

/// Terms of the free-energy upper bound, all energy densities.
struct BoundBreakdown {
  double ground_term = 0.0;    // 2 pi rho^2 delta (1 + delta (gamma + 1/4 + log(pi)/2))
  double thermal_term = 0.0;   // <= 0
  double error_term = 0.0;     // C rho^2 delta (delta |log delta| + T/T_c)^2
  double f_upper = 0.0;
  double error_constant = 1.0;
  /// 4 pi rho^2 Y (1 - Y |log Y| + (2 gamma + 1/2 + log pi) Y), for comparison.
  double ground_term_Y = 0.0;
};

/// T / (2 pi) int_0^inf log(1 - exp(-sqrt(p^4 + 8 pi rho delta p^2) / T)) p dp.
/// T = 0 gives 0.
double thermal_integral(double rho, double delta, double T, double tol = 1e-12);

struct ExplicitIntegral {
  double quadrature = 0.0;
  double closed_form = 0.0;  // (A^2 / 16 pi)(1/2 - log 2 + log A - 2 log k_c)
};

/// (1/2) int (sqrt(p^4 + 2 A p^2) - p^2 - A + A^2 / (2 p^2) 1{|p| > k_c}) d^2p / (2 pi)^2.
/// Throws CutoffTooLarge when k_c^2 > A / 100.
ExplicitIntegral explicit_constant_integral(double A, double kc, double tol = 1e-12);
double explicit_constant_closed_form(double A, double kc);
/// The closed form rewritten for A = 4 pi rho0 delta and k_c = 2 e^{-gamma} sqrt(rho Y):
/// (A^2 / 16 pi)(2 gamma + 1/2 + log pi + log(rho0 delta / (2 rho Y))).
double explicit_constant_physical_form(double rho, double rho0, double delta, double Y);
/// k_c = 2 e^{-gamma} sqrt(rho Y).
double explicit_constant_cutoff(double rho, double Y);

BoundBreakdown assemble_bound(const GasParameters& p, double error_constant = 1.0,
                              double tol = 1e-12);

/// Slack constant K in majorant <= expanded + K rho^2 delta^2. A sweep over
/// rho a^2 in [1e-12, 1e-4] and T / T_c in (0, 1) peaks at 21.33, near T_c
/// at the densest point.
inline constexpr double kDilogChainSlack = 24.0;

struct DilogChain {
  double lhs = 0.0;        // thermal_integral
  double majorant = 0.0;   // -(T^2 / 4 pi) Li2(exp(-4 pi rho delta / T))
  double expanded = 0.0;   // -pi T^2 / 24 + 4 pi rho^2 delta T / T_c
  double slack = 0.0;      // kDilogChainSlack rho^2 delta^2
  bool holds = false;      // lhs <= majorant <= expanded + slack
};

/// Requires 0 < T < T_c, DomainError otherwise.
DilogChain dilog_chain(double rho, double delta, double T, double tol = 1e-12);

}  // namespace bose2d
