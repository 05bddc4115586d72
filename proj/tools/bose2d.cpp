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

// Command-line front end: params, scatter, bound, sweep and verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bose2d/config.hpp"
#include "bose2d/entropy.hpp"
#include "bose2d/error.hpp"
#include "bose2d/freeenergy.hpp"
#include "bose2d/params.hpp"
#include "bose2d/scattering.hpp"
#include "bose2d/verify.hpp"

namespace {

using namespace bose2d;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct Globals {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

bool is_usage_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NegativeInput:
    case ErrorCode::DegenerateGas:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::WordTooLong:
      return true;
    default:
      return false;
  }
}

ConfigRecord load_config(const Globals& g) {
  return g.config.empty() ? ConfigRecord{} : ConfigRecord::load(g.config);
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw Error(ErrorCode::InvalidArgument, "cli", "cannot write " + g.out);
  os << text;
}

void warn_temperature(double t, double threshold) {
  if (t > threshold)
    std::cerr << "warning: T/T_c = " << format9(t) << " exceeds " << format9(threshold)
              << "; the bound's constant is only controlled for small T/T_c\n";
}

// ------------------------------------------------------------- params

struct ParamsArgs {
  std::optional<double> rho, a, rho_a2, T, t_rel, alpha, b;
};

int cmd_params(const Globals& g, const ParamsArgs& x) {
  const ConfigRecord cfg = load_config(g);
  const double rho = x.rho.value_or(cfg.number("rho").value_or(1.0));
  const double alpha = x.alpha.value_or(cfg.number("alpha").value_or(2.5));
  std::optional<double> b = x.b ? x.b : cfg.number("b");
  double a = 0.0;
  if (x.a) a = *x.a;
  else if (x.rho_a2) a = std::sqrt(*x.rho_a2 / rho);
  else if (auto v = cfg.number("a")) a = *v;
  else if (auto v = cfg.number("rho_a2")) a = std::sqrt(*v / rho);
  else throw Error(ErrorCode::InvalidArgument, "cli::params", "give --a or --rho-a2");
  double T = x.T.value_or(cfg.number("T").value_or(0.0));
  if (x.t_rel) T = *x.t_rel * critical_temperature(rho, diluteness_delta(rho * a * a));
  const GasParameters p = derive_parameters(rho, a, T, alpha, b);
  emit(g, format_report({{"rho", p.rho},
                         {"a", p.a},
                         {"rho_a2", p.gas_parameter()},
                         {"T", p.T},
                         {"Y", p.Y},
                         {"delta", p.delta},
                         {"Tc", p.Tc},
                         {"Tc_over_rho", p.Tc / p.rho},
                         {"T_over_Tc", p.T / p.Tc},
                         {"L", p.L},
                         {"N", p.particle_number()},
                         {"Rtilde", p.Rtilde},
                         {"b", p.b},
                         {"bec_length_check", bec_length_check(p) ? 1.0 : 0.0}}));
  return kExitOk;
}

// ------------------------------------------------------------- scatter

struct ScatterArgs {
  bool softdisk = false;
  double v0 = 2.0, r0 = 1.0;
  std::string table;
  std::optional<double> r_unit, R;
};

int cmd_scatter(const Globals& g, const ScatterArgs& x) {
  const ConfigRecord cfg = load_config(g);
  const double tol = g.tol.value_or(1e-10);
  std::optional<RadialPotential> v;
  std::string table = x.table.empty() && cfg.has("potential_table") ? cfg.get("potential_table")
                                                                     : x.table;
  if (x.softdisk || table.empty()) {
    v = RadialPotential::soft_disk(x.v0, x.r0);
  } else {
    RadialPotential raw = load_potential_table(table);
    const double unit = x.r_unit.value_or(cfg.number("r_unit").value_or(1.0));
    v = raw.with_radius_unit(unit);
  }
  const double support = v->support_radius();
  const double R = x.R.value_or(cfg.number("R").value_or(10.0 * support));
  const auto sol = solve_scattering(*v, R, tol);
  const double a = sol.scattering_length;
  std::vector<std::pair<std::string, double>> items{{"support_radius", support},
                                                    {"R", R},
                                                    {"a", a},
                                                    {"a_over_support", a / support},
                                                    {"a_at_2R", sol.scattering_length_2R},
                                                    {"functional_value", sol.functional_value}};
  if (a > 0.0) items.push_back({"two_pi_over_log_R_over_a", 2.0 * std::numbers::pi / std::log(R / a)});
  emit(g, format_report(items));
  return kExitOk;
}

// ------------------------------------------------------------- bound

struct BoundArgs {
  std::optional<double> rho, rho_a2, t_rel, error_c;
};

int cmd_bound(const Globals& g, const BoundArgs& x) {
  const ConfigRecord cfg = load_config(g);
  const SweepConfig sc = SweepConfig::from_record(cfg);
  const double rho = x.rho.value_or(sc.rho);
  const double rho_a2 = x.rho_a2.value_or(sc.rho_a2.empty() ? 1e-10 : sc.rho_a2.front());
  const double t = x.t_rel.value_or(sc.T_over_Tc.empty() ? 0.0 : sc.T_over_Tc.front());
  const double C = x.error_c.value_or(sc.error_constant);
  const double tol = std::min(g.tol.value_or(sc.tol), 1e-10);
  if (!(t >= 0.0 && t < 1.0))
    throw Error(ErrorCode::InvalidArgument, "cli::bound", "--t-rel must lie in [0, 1)");
  warn_temperature(t, sc.warn_T_over_Tc);
  const GasParameters p = parameters_at(rho, rho_a2, t);
  const BoundBreakdown b = assemble_bound(p, C, tol);
  const std::string report = format_report({{"rho", rho},
                                            {"rho_a2", rho_a2},
                                            {"T_over_Tc", t},
                                            {"T", p.T},
                                            {"delta", p.delta},
                                            {"Y", p.Y},
                                            {"ground_term", b.ground_term},
                                            {"thermal_term", b.thermal_term},
                                            {"error_term", b.error_term},
                                            {"error_constant", b.error_constant},
                                            {"f_upper", b.f_upper},
                                            {"ground_term_Y", b.ground_term_Y}});
  std::cout << report;
  if (!g.out.empty()) {
    std::ofstream os(g.out, std::ios::binary);
    if (!os) throw Error(ErrorCode::InvalidArgument, "cli", "cannot write " + g.out);
    os << "rho,rho_a2,T_over_Tc,ground_term,thermal_term,error_term,f_upper\n";
    os << format17(rho) << ',' << format17(rho_a2) << ',' << format17(t) << ','
       << format17(b.ground_term) << ',' << format17(b.thermal_term) << ','
       << format17(b.error_term) << ',' << format17(b.f_upper) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------- sweep

struct SweepArgs {
  std::optional<double> rho, error_c;
  std::vector<double> rho_a2, t_rel;
};

int cmd_sweep(const Globals& g, const SweepArgs& x) {
  const ConfigRecord cfg = load_config(g);
  SweepConfig sc = SweepConfig::from_record(cfg);
  if (x.rho) sc.rho = *x.rho;
  if (x.error_c) sc.error_constant = *x.error_c;
  if (!x.rho_a2.empty()) sc.rho_a2 = x.rho_a2;
  if (!x.t_rel.empty()) sc.T_over_Tc = x.t_rel;
  if (g.tol) sc.tol = *g.tol;
  if (g.seed) sc.seed = *g.seed;
  if (!g.out.empty()) sc.out = g.out;
  sc.validate();
  for (double t : sc.T_over_Tc) warn_temperature(t, sc.warn_T_over_Tc);
  const auto rows = run_sweep(sc);
  std::ostringstream os;
  write_sweep_csv(os, rows);
  Globals target = g;
  target.out = sc.out;
  emit(target, os.str());
  bool failed = false;
  for (const auto& r : rows)
    if (r.status != "ok") {
      failed = true;
      std::cerr << "row rho_a2=" << format9(r.rho_a2) << " T_over_Tc=" << format9(r.T_over_Tc)
                << " failed: " << r.status << '\n';
    }
  return failed ? kExitFailure : kExitOk;
}

// ------------------------------------------------------------- verify

int cmd_verify(const Globals& g, const std::string& suite) {
  const ConfigRecord cfg = load_config(g);
  std::uint64_t seed = 0;
  if (cfg.has("seed")) seed = std::stoull(cfg.get("seed"));
  if (g.seed) seed = *g.seed;
  const auto checks = run_suite(suite, seed);
  std::cout << format_checks(checks);
  if (!g.out.empty()) {
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["seed"] = seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"suite", c.suite}, {"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs},
                     {"tol", c.tol}, {"pass", c.pass}});
    doc["checks"] = arr;
    if (suite == "entropy" || suite == "all") {
      doc["eigenvalue_difference"] = nlohmann::json::parse(suite_json(eigenvalue_difference_suite(seed)));
      doc["fannes"] = nlohmann::json::parse(suite_json(fannes_suite(seed)));
    }
    std::ofstream os(g.out, std::ios::binary);
    if (!os) throw Error(ErrorCode::InvalidArgument, "cli", "cannot write " + g.out);
    os << doc.dump(2) << '\n';
  }
  return all_pass(checks) ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-energy upper bound and identity checks for the dilute 2D Bose gas"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "flat key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "write the result to this path");
  app.add_option("--seed", g.seed, "root seed for randomised checks");
  app.add_option("--tol", g.tol, "solver tolerance")->check(CLI::Range(1e-16, 1e-2));

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "derived gas parameters");
  params->add_option("--rho", pa.rho, "density");
  params->add_option("--a", pa.a, "scattering length");
  params->add_option("--rho-a2", pa.rho_a2, "gas parameter rho a^2");
  params->add_option("--T", pa.T, "temperature");
  params->add_option("--t-rel", pa.t_rel, "temperature as a fraction of T_c");
  params->add_option("--alpha", pa.alpha, "box exponent");
  params->add_option("--b", pa.b, "Jastrow radius");

  ScatterArgs sa;
  auto* scatter = app.add_subcommand("scatter", "scattering length of a radial potential");
  scatter->add_flag("--softdisk", sa.softdisk, "use a soft disk (default)");
  scatter->add_option("--v0", sa.v0, "soft disk height");
  scatter->add_option("--r0", sa.r0, "soft disk radius");
  scatter->add_option("--table", sa.table, "two-column r, v(r) table")->check(CLI::ExistingFile);
  scatter->add_option("--r-unit", sa.r_unit, "length unit of the table radii");
  scatter->add_option("--R", sa.R, "matching radius (default 10 x support)");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "free-energy upper bound at one point");
  bound->add_option("--rho", ba.rho, "density");
  bound->add_option("--rho-a2", ba.rho_a2, "gas parameter rho a^2");
  bound->add_option("--t-rel", ba.t_rel, "T / T_c");
  bound->add_option("--error-c", ba.error_c, "constant C of the error term");

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "bound and lemma sums over a grid, as CSV");
  sweep->add_option("--rho", wa.rho, "density");
  sweep->add_option("--rho-a2", wa.rho_a2, "gas parameter (repeatable)");
  sweep->add_option("--t-rel", wa.t_rel, "T / T_c (repeatable)");
  sweep->add_option("--error-c", wa.error_c, "constant C of the error term");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the identity and inequality suites");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"scattering", "softpot", "bogolattice", "freeenergy", "entropy",
                             "fock", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*params) return cmd_params(g, pa);
    if (*scatter) return cmd_scatter(g, sa);
    if (*bound) return cmd_bound(g, ba);
    if (*sweep) return cmd_sweep(g, wa);
    if (*verify) return cmd_verify(g, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
