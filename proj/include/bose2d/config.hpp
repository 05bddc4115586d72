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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bose2d/freeenergy.hpp"
#include "bose2d/params.hpp"

namespace bose2d {

/// Flat "key = value" text. Blank lines and '#' comments are skipped and a
/// repeated key collects its values into a list in file order.
class ConfigRecord {
 public:
  static ConfigRecord parse(std::istream& in);
  static ConfigRecord load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  /// Last value of a key.
  std::string get(const std::string& key) const;
  std::optional<double> number(const std::string& key) const;
  std::vector<double> numbers(const std::string& key) const;
  const std::map<std::string, std::vector<std::string>>& entries() const { return values_; }
  /// The last value of every key, for from_record().
  std::map<std::string, std::string> flat() const;

  void add(const std::string& key, const std::string& value) { values_[key].push_back(value); }

 private:
  std::map<std::string, std::vector<std::string>> values_;
};

struct SweepConfig {
  double rho = 1.0;
  std::vector<double> rho_a2{1e-6, 1e-8, 1e-10};
  std::vector<double> T_over_Tc{0.0, 0.1, 0.5};
  double tol = 1e-10;
  double error_constant = 1.0;
  /// Rows above this T / T_c get a warning, not an error.
  double warn_T_over_Tc = 0.5;
  std::uint64_t seed = 0;
  std::string out;

  /// Overrides fields from keys rho, rho_a2, T_over_Tc, tol, error_C,
  /// warn_T_over_Tc, seed and out.
  static SweepConfig from_record(const ConfigRecord& record);
  /// InvalidArgument on empty grids, tol outside (0, 1e-2] or T / T_c
  /// outside [0, 1).
  void validate() const;
};

/// Parameters at rho, rho a^2 and T = t T_c.
GasParameters parameters_at(double rho, double rho_a2, double T_over_Tc);

struct SweepRow {
  double rho = 0.0;
  double rho_a2 = 0.0;
  double T_over_Tc = 0.0;
  BoundBreakdown bound;
  double S2 = 0.0, SC = 0.0, Q2 = 0.0, N0 = 0.0;
  std::string status = "ok";
};

/// One row per grid point, rho a^2 major. Points run concurrently and are
/// stored in grid order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
/// A single point with the same code path as run_sweep.
SweepRow sweep_point(double rho, double rho_a2, double T_over_Tc, double tol,
                     double error_constant);

inline constexpr const char* kSweepHeader =
    "rho,rho_a2,T_over_Tc,ground_term,thermal_term,error_term,f_upper,S2,SC,Q2,N0,status";
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Aligned "key = value" lines with 9 significant digits.
std::string format_report(const std::vector<std::pair<std::string, double>>& items);
/// %.17g
std::string format17(double x);
/// %.9g
std::string format9(double x);

}  // namespace bose2d
