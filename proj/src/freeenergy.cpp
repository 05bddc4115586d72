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

#include "bose2d/freeenergy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bose2d/error.hpp"
#include "bose2d/quadrature.hpp"
#include "bose2d/special.hpp"

namespace bose2d {

using std::numbers::pi;

double ground_constant() { return kEulerGamma + 0.25 + 0.5 * std::log(pi); }

double thermal_integral(double rho, double delta, double T, double tol) {
  constexpr const char* where = "freeenergy::thermal_integral";
  if (T < 0.0 || rho < 0.0 || delta < 0.0)
    throw Error(ErrorCode::NegativeInput, where, "rho, delta and T must be nonnegative");
  if (T == 0.0) return 0.0;
  const double c = 8.0 * pi * rho * delta;
  // With u = p^2 = t^2 the log singularity at the origin becomes t log t.
  auto f = [c, T](double t) {
    if (t == 0.0) return 0.0;
    const double u = t * t;
    return 2.0 * t * special::log1mexp(std::sqrt(u * (u + c)) / T);
  };
  // Past u = 800 T the integrand is below e^{-800}.
  const double tmax = std::sqrt(800.0 * T);
  std::vector<double> nodes{0.0};
  for (double u : {std::min(c, T), std::max(c, T)}) {
    const double t = std::sqrt(u);
    if (t > nodes.back() && t < tmax) nodes.push_back(t);
  }
  nodes.push_back(tmax);
  const auto r = quad::integrate_pieces(f, nodes, 0.0, tol);
  if (!r.converged)
    throw Error(ErrorCode::QuadratureNonconvergence, where, "adaptive quadrature did not settle");
  return T / (4.0 * pi) * r.value;
}

double explicit_constant_closed_form(double A, double kc) {
  if (A == 0.0) return 0.0;
  return A * A / (16.0 * pi) * (0.5 - std::numbers::ln2 + std::log(A) - 2.0 * std::log(kc));
}

double explicit_constant_cutoff(double rho, double Y) {
  return 2.0 * std::exp(-kEulerGamma) * std::sqrt(rho * Y);
}

double explicit_constant_physical_form(double rho, double rho0, double delta, double Y) {
  const double A = 4.0 * pi * rho0 * delta;
  return A * A / (16.0 * pi) *
         (2.0 * kEulerGamma + 0.5 + std::log(pi) + std::log(rho0 * delta / (2.0 * rho * Y)));
}

ExplicitIntegral explicit_constant_integral(double A, double kc, double tol) {
  constexpr const char* where = "freeenergy::explicit_constant_integral";
  if (A < 0.0 || !(kc > 0.0))
    throw Error(ErrorCode::InvalidArgument, where, "need A >= 0 and k_c > 0");
  ExplicitIntegral out;
  if (A == 0.0) return out;
  const double u_c = kc * kc;
  if (u_c > A / 100.0)
    throw Error(ErrorCode::CutoffTooLarge, where, "k_c^2 exceeds A / 100");
  // Rationalised so nothing cancels: sqrt(u^2 + 2Au) - u - A = -A^2 / (S + u + A).
  auto inner = [A](double u) {
    const double S = std::sqrt(u * (u + 2.0 * A));
    return -A * A / (S + u + A);
  };
  auto outer = [A](double u) {
    const double S = std::sqrt(u * (u + 2.0 * A));
    const double su = 2.0 * A * u / (S + u);  // S - u
    return A * A * (su + A) / (2.0 * u * (S + u + A));
  };
  const auto r1 = quad::integrate(inner, 0.0, u_c, 0.0, tol);
  const auto r2 = quad::integrate(outer, u_c, A, 0.0, tol);
  const auto r3 = quad::integrate_to_infinity(outer, A, 0.0, tol);
  if (!(r1.converged && r2.converged && r3.converged))
    throw Error(ErrorCode::QuadratureNonconvergence, where, "adaptive quadrature did not settle");
  // d^2p / (2 pi)^2 = du / (4 pi), times the leading 1/2.
  out.quadrature = (r1.value + r2.value + r3.value) / (8.0 * pi);
  out.closed_form = explicit_constant_closed_form(A, kc);
  return out;
}

BoundBreakdown assemble_bound(const GasParameters& p, double error_constant, double tol) {
  BoundBreakdown b;
  const double rho2 = p.rho * p.rho;
  b.error_constant = error_constant;
  b.ground_term = 2.0 * pi * rho2 * p.delta * (1.0 + p.delta * ground_constant());
  b.thermal_term = thermal_integral(p.rho, p.delta, p.T, tol);
  const double e = p.delta * std::abs(std::log(p.delta)) + p.T / p.Tc;
  b.error_term = error_constant * rho2 * p.delta * e * e;
  b.f_upper = b.ground_term + b.thermal_term + b.error_term;
  const double Y = p.Y;
  b.ground_term_Y = 4.0 * pi * rho2 * Y *
                    (1.0 - Y * std::abs(std::log(Y)) +
                     (2.0 * kEulerGamma + 0.5 + std::log(pi)) * Y);
  return b;
}

DilogChain dilog_chain(double rho, double delta, double T, double tol) {
  const double Tc = critical_temperature(rho, delta);
  if (!(T > 0.0 && T < Tc))
    throw Error(ErrorCode::DomainError, "freeenergy::dilog_chain", "requires 0 < T < T_c");
  DilogChain c;
  c.lhs = thermal_integral(rho, delta, T, tol);
  c.majorant = -T * T / (4.0 * pi) * special::dilog(std::exp(-4.0 * pi * rho * delta / T));
  c.expanded = -pi * T * T / 24.0 + 4.0 * pi * rho * rho * delta * T / Tc;
  c.slack = kDilogChainSlack * rho * rho * delta * delta;
  c.holds = c.lhs <= c.majorant && c.majorant <= c.expanded + c.slack;
  return c;
}

}  // namespace bose2d
