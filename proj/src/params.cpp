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

#include "bose2d/params.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "bose2d/error.hpp"

namespace bose2d {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateGas: return "DegenerateGas";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SolverDivergence: return "SolverDivergence";
    case ErrorCode::NonPositiveLogArgument: return "NonPositiveLogArgument";
    case ErrorCode::MeshMismatch: return "MeshMismatch";
    case ErrorCode::MissingScatteringSolution: return "MissingScatteringSolution";
    case ErrorCode::QuadratureNonconvergence: return "QuadratureNonconvergence";
    case ErrorCode::NonPositiveDispersion: return "NonPositiveDispersion";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::CutoffTooLarge: return "CutoffTooLarge";
    case ErrorCode::NoCondensateSolution: return "NoCondensateSolution";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WordTooLong: return "WordTooLong";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_gas_parameter(double rho_a2, const char* where) {
  if (!(rho_a2 < std::exp(-1.0)))
    throw Error(ErrorCode::DegenerateGas, where, "rho a^2 must be below 1/e");
}

}  // namespace

double diluteness_Y(double rho_a2) {
  check_gas_parameter(rho_a2, "diluteness_Y");
  return 1.0 / std::abs(std::log(rho_a2));
}

double diluteness_delta(double rho_a2) {
  check_gas_parameter(rho_a2, "diluteness_delta");
  const double l = std::abs(std::log(rho_a2));
  return 2.0 / (l + std::log(l));
}

double critical_temperature(double rho, double delta) {
  return 4.0 * M_PI * rho / std::abs(std::log(delta));
}

double GasParameters::beta() const {
  return T > 0.0 ? 1.0 / T : std::numeric_limits<double>::infinity();
}

GasParameters derive_parameters(double rho, double a, double T, double alpha,
                                std::optional<double> b, double eta) {
  constexpr const char* where = "params::derive_parameters";
  if (!(rho > 0.0)) throw Error(ErrorCode::NegativeInput, where, "rho must be positive");
  if (!(a > 0.0)) throw Error(ErrorCode::NegativeInput, where, "a must be positive");
  if (!(T >= 0.0)) throw Error(ErrorCode::NegativeInput, where, "T must be nonnegative");
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, where, "alpha must be positive");
  if (!(std::abs(eta) <= 0.5))
    throw Error(ErrorCode::InvalidArgument, where, "eta must lie in [-1/2, 1/2]");
  const double rho_a2 = rho * a * a;
  check_gas_parameter(rho_a2, where);

  GasParameters p;
  p.rho = rho;
  p.a = a;
  p.T = T;
  p.alpha = alpha;
  p.eta = eta;
  p.Y = diluteness_Y(rho_a2);
  p.delta = diluteness_delta(rho_a2);
  p.Tc = critical_temperature(rho, p.delta);
  const double spacing = 1.0 / std::sqrt(rho);
  p.L = spacing * std::pow(p.Y, -alpha);
  p.Rtilde = a / std::sqrt(rho_a2 * p.Y);

  if (b) {
    if (!(*b > a && *b < spacing))
      throw Error(ErrorCode::InvalidArgument, where, "b must satisfy a < b < rho^{-1/2}");
    p.b = *b;
  } else {
    // The asymptotic choice rho^{-1/2} Y^{11/2} drops below a unless rho a^2
    // is astronomically small; fall back to the log-midpoint of (a, rho^{-1/2}).
    const double asymptotic = spacing * std::pow(p.Y, 5.5);
    p.b = (asymptotic > a && asymptotic < spacing) ? asymptotic : std::sqrt(a * spacing);
  }
  return p;
}

GasParameters derive_from_gas_parameter(double rho, double rho_a2, double T, double alpha,
                                        std::optional<double> b) {
  if (!(rho > 0.0) || !(rho_a2 > 0.0))
    throw Error(ErrorCode::NegativeInput, "params::derive_from_gas_parameter",
                "rho and rho a^2 must be positive");
  return derive_parameters(rho, std::sqrt(rho_a2 / rho), T, alpha, b);
}

bool bec_length_check(const GasParameters& p) {
  if (p.T <= 0.0) return true;
  const double rhs = p.T * std::log(p.T * p.L * p.L);
  // Rounding slack so that a temperature solved onto the boundary still counts.
  return p.rho >= rhs - 1e-12 * std::abs(p.rho);
}

namespace {

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::map<std::string, std::string>& r, const std::string& key) {
  auto it = r.find(key);
  if (it == r.end()) throw Error(ErrorCode::ParseError, "params::from_record", "missing key " + key);
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "params::from_record", "bad number for " + key);
  }
}

}  // namespace

std::map<std::string, std::string> to_record(const GasParameters& p) {
  return {{"rho", format17(p.rho)},
          {"a", format17(p.a)},
          {"T", format17(p.T)},
          {"alpha", format17(p.alpha)},
          {"b", format17(p.b)}};
}

GasParameters from_record(const std::map<std::string, std::string>& record) {
  const double rho = parse_double(record, "rho");
  const double a = parse_double(record, "a");
  const double T = record.count("T") ? parse_double(record, "T") : 0.0;
  const double alpha = record.count("alpha") ? parse_double(record, "alpha") : 2.5;
  std::optional<double> b;
  if (record.count("b")) b = parse_double(record, "b");
  return derive_parameters(rho, a, T, alpha, b);
}

}  // namespace bose2d
