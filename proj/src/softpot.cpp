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

#include "bose2d/softpot.hpp"

#include <cmath>
#include <numbers>

#include "bose2d/error.hpp"
#include "bose2d/quadrature.hpp"
#include "bose2d/special.hpp"

namespace bose2d {

double Interaction::operator()(double p) const {
  if (g0 == 0.0) return 0.0;
  if (b == 0.0) return g0;
  return g0 * special::bessel_j0(b * p);
}

SoftPotential::SoftPotential(double a, double b, double delta, double support_radius)
    : a_(a), b_(b), delta_(delta), log_ba_(0.0), support_(support_radius > 0 ? support_radius : a) {
  constexpr const char* where = "softpot::SoftPotential";
  if (!(a > 0.0) || !(delta > 0.0))
    throw Error(ErrorCode::NegativeInput, where, "a and delta must be positive");
  if (!(b > a)) throw Error(ErrorCode::InvalidArgument, where, "b must exceed a");
  log_ba_ = std::log(b / a);
  if (!(delta * log_ba_ < 1.0))
    throw Error(ErrorCode::InvalidArgument, where, "b must lie inside the scattering radius");
  if (support_ > b_)
    throw Error(ErrorCode::InvalidArgument, where, "potential support must lie inside b");
}

SoftPotential SoftPotential::from_parameters(const GasParameters& p) {
  return SoftPotential(p.a, p.b, p.delta);
}

SoftPotential& SoftPotential::with_scattering(const ScatteringSolution& sol) {
  if (std::abs(sol.scattering_length - a_) > 1e-6 * a_)
    throw Error(ErrorCode::InvalidArgument, "softpot::with_scattering",
                "scattering solution has a different scattering length");
  if (sol.support_radius > b_)
    throw Error(ErrorCode::InvalidArgument, "softpot::with_scattering",
                "potential support must lie inside b");
  support_ = sol.support_radius;
  interior_ = sol;
  return *this;
}

double SoftPotential::vtilde_hat(double p) const {
  if (p == 0.0) return mass();
  return mass() * special::bessel_j0(b_ * p);
}

double SoftPotential::g_hat(double p) const {
  if (p == 0.0) return gmass();
  return gmass() * special::bessel_j0(b_ * p);
}

double SoftPotential::jastrow_profile(double r) const {
  if (r >= b_) return 1.0;
  if (r >= support_) return std::log(r / a_) / log_ba_;
  if (!interior_)
    throw Error(ErrorCode::MissingScatteringSolution, "softpot::jastrow_profile",
                "radius lies inside the potential support");
  // phi_b = phi_R log(R/a) / log(b/a)
  const auto& s = *interior_;
  return s.phi_at(r) * std::log(s.R / s.scattering_length) / log_ba_;
}

namespace {

constexpr int kSquaredZeros = 400;
constexpr int kAbsZeros = 2000;

// int_X^inf J0(x)^2 / x dx from the Hankel expansion, error O(X^-4).
double j0_squared_tail(double X) {
  const double s = std::sin(2 * X), c = std::cos(2 * X);
  return (1.0 / X + c / (2 * X * X) + 0.625 * s / (X * X * X) - 1.0 / (24 * X * X * X)) /
         std::numbers::pi;
}

}  // namespace

double j0_squared_log_moment(double tol, int* intervals) {
  constexpr const char* where = "softpot::g_omega_zero_quadrature";
  auto inner = [](double x) {
    const double j = special::bessel_j0(x);
    // (J0^2 - 1)/x = -(1 - J0)(1 + J0)/x, no cancellation at small x
    return x == 0.0 ? 0.0 : -(1.0 - j) * (1.0 + j) / x;
  };
  auto outer = [](double x) {
    const double j = special::bessel_j0(x);
    return j * j / x;
  };
  const auto head = quad::integrate(inner, 0.0, 1.0, 1e-16, tol * 1e-2);
  if (!head.converged)
    throw Error(ErrorCode::QuadratureNonconvergence, where, "small-x segment did not converge");

  double partial = 0.0, lo = 1.0;
  double prev_estimate = 0.0, estimate = 0.0, prev2 = 0.0;
  int count = 1;
  for (int k = 1; k <= kSquaredZeros; ++k) {
    const double hi = special::bessel_j0_zero(k);
    if (hi <= lo) continue;
    const auto r = quad::integrate(outer, lo, hi, 1e-17, tol * 1e-2);
    if (!r.converged)
      throw Error(ErrorCode::QuadratureNonconvergence, where, "zero interval did not converge");
    partial += r.value;
    count += r.intervals;
    lo = hi;
    prev2 = prev_estimate;
    prev_estimate = estimate;
    estimate = partial + j0_squared_tail(hi);
  }
  // average the last two tail-corrected partial sums
  const double averaged = 0.5 * (estimate + prev_estimate);
  const double prev_avg = 0.5 * (prev_estimate + prev2);
  const double total = head.value + averaged;
  if (std::abs(averaged - prev_avg) > tol * std::abs(total))
    throw Error(ErrorCode::QuadratureNonconvergence, where,
                "tail estimate did not settle within tolerance");
  if (intervals) *intervals = count;
  return total;
}

double abs_j0_tail_moment(double X, double tol) {
  constexpr const char* where = "softpot::abs_j0_tail_moment";
  if (!(X >= 1.0)) throw Error(ErrorCode::DomainError, where, "X must be >= 1");
  auto f = [](double x) { return std::abs(special::bessel_j0(x)) / x; };
  // First zero at or beyond X.
  int k = std::max(1, int(std::floor(X / std::numbers::pi)) - 1);
  while (special::bessel_j0_zero(k) <= X) ++k;
  double lo = X, sum = 0.0;
  const int last = std::max(k + kAbsZeros, kAbsZeros);
  for (int i = k; i <= last; ++i) {
    const double hi = special::bessel_j0_zero(i);
    const auto r = quad::integrate(f, lo, hi, 1e-18, tol * 1e-2);
    if (!r.converged)
      throw Error(ErrorCode::QuadratureNonconvergence, where, "zero interval did not converge");
    sum += r.value;
    lo = hi;
  }
  // |cos| averages to 2/pi over each half period.
  const double tail = std::sqrt(2.0 / std::numbers::pi) * (2.0 / std::numbers::pi) * 2.0 /
                      std::sqrt(lo);
  return sum + tail;
}

GOmegaResult g_omega_zero_quadrature(const SoftPotential& sp, double tol) {
  GOmegaResult out;
  // log(b k_c) with k_c = 2 exp(-gamma - 1/delta) / a, kept in log space since
  // 1/delta can exceed the exponent range.
  out.log_cutoff = sp.log_ratio() + std::numbers::ln2 - kEulerGamma - 1.0 / sp.delta();
  const double moment = j0_squared_log_moment(tol, &out.intervals);
  const double g0 = sp.gmass();
  out.value = g0 * g0 / (4.0 * std::numbers::pi) * (moment - out.log_cutoff);
  out.oracle = g0 * (1.0 - sp.phib());
  return out;
}

}  // namespace bose2d
