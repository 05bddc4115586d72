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

#include "bose2d/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bose2d/error.hpp"
#include "bose2d/lattice.hpp"
#include "bose2d/softpot.hpp"

namespace bose2d {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "config", "bad number '" + text + "' for " + key);
}

}  // namespace

ConfigRecord ConfigRecord::parse(std::istream& in) {
  ConfigRecord rec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "config",
                  "line " + std::to_string(lineno) + " lacks '='");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw Error(ErrorCode::ParseError, "config", "line " + std::to_string(lineno) + " has no key");
    rec.add(key, trim(line.substr(eq + 1)));
  }
  return rec;
}

ConfigRecord ConfigRecord::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "config", "cannot open " + path);
  return parse(in);
}

std::string ConfigRecord::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorCode::ParseError, "config", "missing key " + key);
  return it->second.back();
}

std::optional<double> ConfigRecord::number(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return to_double(key, get(key));
}

std::vector<double> ConfigRecord::numbers(const std::string& key) const {
  std::vector<double> out;
  const auto it = values_.find(key);
  if (it == values_.end()) return out;
  for (const auto& v : it->second)
    if (!v.empty()) out.push_back(to_double(key, v));
  return out;
}

std::map<std::string, std::string> ConfigRecord::flat() const {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : values_) out[k] = v.back();
  return out;
}

SweepConfig SweepConfig::from_record(const ConfigRecord& r) {
  SweepConfig c;
  if (auto v = r.number("rho")) c.rho = *v;
  if (r.has("rho_a2")) c.rho_a2 = r.numbers("rho_a2");
  if (r.has("T_over_Tc")) c.T_over_Tc = r.numbers("T_over_Tc");
  if (auto v = r.number("tol")) c.tol = *v;
  if (auto v = r.number("error_C")) c.error_constant = *v;
  if (auto v = r.number("warn_T_over_Tc")) c.warn_T_over_Tc = *v;
  if (r.has("seed")) {
    try {
      c.seed = std::stoull(r.get("seed"));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "config", "bad seed");
    }
  }
  if (r.has("out")) c.out = r.get("out");
  return c;
}

void SweepConfig::validate() const {
  constexpr const char* where = "cli::SweepConfig";
  if (rho_a2.empty() || T_over_Tc.empty())
    throw Error(ErrorCode::InvalidArgument, where, "grids must be nonempty");
  if (!(tol > 0.0 && tol <= 1e-2))
    throw Error(ErrorCode::InvalidArgument, where, "tol must lie in (0, 1e-2]");
  for (double t : T_over_Tc)
    if (!(t >= 0.0 && t < 1.0))
      throw Error(ErrorCode::InvalidArgument, where, "T_over_Tc values must lie in [0, 1)");
  if (!(rho > 0.0)) throw Error(ErrorCode::InvalidArgument, where, "rho must be positive");
}

GasParameters parameters_at(double rho, double rho_a2, double T_over_Tc) {
  const double Tc = critical_temperature(rho, diluteness_delta(rho_a2));
  return derive_from_gas_parameter(rho, rho_a2, T_over_Tc * Tc);
}

SweepRow sweep_point(double rho, double rho_a2, double T_over_Tc, double tol,
                     double error_constant) {
  SweepRow row;
  row.rho = rho;
  row.rho_a2 = rho_a2;
  row.T_over_Tc = T_over_Tc;
  const GasParameters p = parameters_at(rho, rho_a2, T_over_Tc);
  row.bound = assemble_bound(p, error_constant, std::min(tol, 1e-10));
  try {
    CondensateOptions opts;
    opts.tol = std::min(tol, 1e-10);
    const auto res = solve_condensate(p, SoftPotential::from_parameters(p).interaction(), opts);
    row.S2 = res.sums.S2;
    row.SC = res.sums.SC;
    row.Q2 = res.sums.Q2;
    row.N0 = res.N0;
  } catch (const Error& e) {
    row.S2 = row.SC = row.Q2 = row.N0 = std::nan("");
    row.status = std::string(to_string(e.code()));
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t nt = config.T_over_Tc.size();
  const std::size_t total = config.rho_a2.size() * nt;
  std::vector<SweepRow> rows(total);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < std::ptrdiff_t(total); ++k) {
    const std::size_t i = std::size_t(k) / nt, j = std::size_t(k) % nt;
    rows[std::size_t(k)] = sweep_point(config.rho, config.rho_a2[i], config.T_over_Tc[j],
                                       config.tol, config.error_constant);
  }
  return rows;
}

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepHeader << '\n';
  for (const auto& r : rows) {
    for (double v : {r.rho, r.rho_a2, r.T_over_Tc, r.bound.ground_term, r.bound.thermal_term,
                     r.bound.error_term, r.bound.f_upper, r.S2, r.SC, r.Q2, r.N0})
      os << format17(v) << ',';
    os << r.status << '\n';
  }
}

std::string format_report(const std::vector<std::pair<std::string, double>>& items) {
  std::size_t width = 0;
  for (const auto& [k, v] : items) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : items)
    os << k << std::string(width - k.size(), ' ') << " = " << format9(v) << '\n';
  return os.str();
}

}  // namespace bose2d
