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

#include <map>
#include <optional>
#include <string>

namespace bose2d {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Dilute-gas parameters in units where hbar^2/2m = 1 and k_B = 1.
///
/// Inputs are the density, the scattering length, the temperature, the box
/// exponent and the Jastrow radius. Everything else is derived once in
/// derive_parameters() and never mutated afterwards.
struct GasParameters {
  double rho = 0.0;    // particles per unit area
  double a = 0.0;      // scattering length
  double T = 0.0;      // temperature
  double alpha = 2.5;  // box exponent, L = rho^{-1/2} Y^{-alpha}
  double b = 0.0;      // Jastrow truncation radius
  double eta = 0.0;    // condensate adjustment, in [-1/2, 1/2]

  double Y = 0.0;       // |log(rho a^2)|^{-1}
  double delta = 0.0;   // 2 / (|log(rho a^2)| + log|log(rho a^2)|)
  double Tc = 0.0;      // 4 pi rho / |log delta|
  double L = 0.0;       // box side
  double Rtilde = 0.0;  // a / sqrt(rho a^2 Y)

  double gas_parameter() const { return rho * a * a; }
  /// N = rho L^2.
  double particle_number() const { return rho * L * L; }
  double beta() const;
};

/// Builds a validated parameter set. When `b` is empty the Jastrow radius
/// defaults to rho^{-1/2} Y^{11/2} if that lies in (a, rho^{-1/2}), and to
/// sqrt(a rho^{-1/2}) otherwise.
GasParameters derive_parameters(double rho, double a, double T, double alpha = 2.5,
                                std::optional<double> b = std::nullopt, double eta = 0.0);

/// Same, with the gas parameter rho a^2 given instead of a.
GasParameters derive_from_gas_parameter(double rho, double rho_a2, double T, double alpha = 2.5,
                                        std::optional<double> b = std::nullopt);

/// Y and delta as free functions of rho a^2.
double diluteness_Y(double rho_a2);
double diluteness_delta(double rho_a2);
/// T_c = 4 pi rho / |log delta|.
double critical_temperature(double rho, double delta);

/// Whether rho >= T log(T L^2) holds at the stored box size. T = 0 counts as
/// condensed.
bool bec_length_check(const GasParameters& p);

/// Flat key/value form (rho, a, T, alpha, b), 17 significant digits.
std::map<std::string, std::string> to_record(const GasParameters& p);
GasParameters from_record(const std::map<std::string, std::string>& record);

}  // namespace bose2d
