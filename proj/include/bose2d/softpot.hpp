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

#include <numbers>
#include <optional>

#include "bose2d/params.hpp"
#include "bose2d/scattering.hpp"

namespace bose2d {

/// Fourier-space interaction g_hat(p) = g0 J0(b p). b = 0 gives a constant,
/// g0 = 0 the free gas.
struct Interaction {
  double g0 = 0.0;
  double b = 0.0;

  double operator()(double p) const;
  static Interaction free() { return {}; }
  static Interaction constant(double g0) { return {g0, 0.0}; }
};

/// The softened potential: a uniform surface measure at radius b with mass
/// 4 pi / log(b/a), together with the profile objects derived from it.
class SoftPotential {
 public:
  /// Requires a < b and delta log(b/a) < 1 (b inside the scattering radius).
  /// `support_radius` bounds where the bare potential acts; below it the
  /// Jastrow profile needs an interior scattering solution.
  SoftPotential(double a, double b, double delta, double support_radius = 0.0);
  static SoftPotential from_parameters(const GasParameters& p);

  /// Attach the interior profile phi_R of the bare potential.
  SoftPotential& with_scattering(const ScatteringSolution& sol);

  double a() const { return a_; }
  double b() const { return b_; }
  double delta() const { return delta_; }
  double log_ratio() const { return log_ba_; }
  /// vtilde_hat(0) = 4 pi / log(b/a).
  double mass() const { return 4.0 * std::numbers::pi / log_ba_; }
  /// g_hat(0) = 4 pi delta.
  double gmass() const { return 4.0 * std::numbers::pi * delta_; }
  /// phi_tilde(b) = delta log(b/a).
  double phib() const { return delta_ * log_ba_; }

  double vtilde_hat(double p) const;
  double g_hat(double p) const;
  Interaction interaction() const { return {gmass(), b_}; }

  /// f(r): 1 beyond b, log(r/a)/log(b/a) between the support and b, and the
  /// rescaled interior scattering solution inside the support.
  double jastrow_profile(double r) const;

 private:
  double a_, b_, delta_, log_ba_;
  double support_;
  std::optional<ScatteringSolution> interior_;
};

struct GOmegaResult {
  double value = 0.0;      // quadrature of the Fourier-space integral
  double oracle = 0.0;     // 4 pi delta (1 - delta log(b/a))
  double log_cutoff = 0.0; // log(b k_c)
  int intervals = 0;
};

/// Fourier-space integral for (g omega)^(0) with the indicator cutoff
/// k_c = 2 exp(-gamma - 1/delta) / a, summed over J0-zero intervals with an
/// asymptotic tail.
GOmegaResult g_omega_zero_quadrature(const SoftPotential& sp, double tol = 1e-10);

/// int_0^inf (J0(x)^2 - 1{x <= 1}) / x dx by the same interval scheme.
double j0_squared_log_moment(double tol = 1e-12, int* intervals = nullptr);

/// int_X^inf |J0(x)| / x dx for X >= 1.
double abs_j0_tail_moment(double X, double tol = 1e-12);

}  // namespace bose2d
