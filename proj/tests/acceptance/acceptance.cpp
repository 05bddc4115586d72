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

// Prints one PASS/FAIL line per acceptance criterion. `--only N` restricts the
// run to one criterion; `--cli PATH` enables the end-to-end determinism run.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "bose2d/config.hpp"
#include "bose2d/entropy.hpp"
#include "bose2d/error.hpp"
#include "bose2d/fock.hpp"
#include "bose2d/freeenergy.hpp"
#include "bose2d/kernels.hpp"
#include "bose2d/lattice.hpp"
#include "bose2d/scattering.hpp"
#include "bose2d/softpot.hpp"
#include "bose2d/special.hpp"
#include "bose2d/verify.hpp"

using namespace bose2d;

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::array<double, 3> kRhoA2{1e-6, 1e-8, 1e-10};
constexpr std::array<double, 3> kT{0.0, 0.1, 0.5};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto disk = RadialPotential::soft_disk(2.0, 1.0);
  const double oracle = std::exp(-std::cyl_bessel_i(0.0, 1.0) / std::cyl_bessel_i(1.0, 1.0));
  const auto sol = solve_scattering(disk, 10.0);
  const std::vector<double> Rs{2.0, 5.0, 10.0};
  const double spread = r_independence_report(disk, Rs);
  const double ea = rel(sol.scattering_length, oracle);
  const double ev = rel(sol.functional_value, 2.0 * pi / std::log(10.0 / oracle));
  const double t = seconds_since(t0);
  return {ea < 1e-8 && spread < 1e-8 && ev < 1e-7 && t < 1.0,
          fmt("a/R0=%.10f rel=%.2e spread=%.2e variational_rel=%.2e time=%.3fs",
              sol.scattering_length, ea, spread, ev, t)};
}

Outcome c2() {
  double worst_mass = 0.0, worst_g = 0.0, worst_zero = 0.0;
  for (double rho_a2 : kRhoA2) {
    const auto p = parameters_at(1.0, rho_a2, 0.0);
    const SoftPotential sp = SoftPotential::from_parameters(p);
    worst_mass = std::max(worst_mass, rel(sp.vtilde_hat(0.0), 4.0 * pi / std::log(sp.b() / sp.a())));
    worst_g = std::max(worst_g, rel(sp.g_hat(0.0), 4.0 * pi * p.delta));
    const double z = special::bessel_j0_zero(1) / sp.b();
    worst_zero = std::max(worst_zero, std::abs(sp.vtilde_hat(z)) / sp.mass());
  }
  return {worst_mass < 1e-14 && worst_g < 1e-14 && worst_zero < 1e-12,
          fmt("mass_rel=%.2e g0_rel=%.2e |v(j01/b)|/mass=%.2e", worst_mass, worst_g, worst_zero)};
}

Outcome c3() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int points = 0;
  for (double rho_a2 : kRhoA2) {
    const double a = std::sqrt(rho_a2), delta = diluteness_delta(rho_a2);
    for (double ratio : {10.0, 100.0, 1000.0}) {
      const auto g = g_omega_zero_quadrature(SoftPotential(a, a * ratio, delta));
      worst = std::max(worst, rel(g.value, g.oracle));
      ++points;
    }
  }
  const double t = seconds_since(t0);
  return {worst < 1e-5 && points == 9 && t < 30.0,
          fmt("worst_rel=%.2e over %d (delta, b/a) points time=%.3fs", worst, points, t)};
}

Outcome c4() {
  double worst = 0.0;
  int fields = 0;
  for (double rho_a2 : kRhoA2)
    for (double t : kT) {
      const auto p = parameters_at(1.0, rho_a2, t);
      const Interaction g = SoftPotential::from_parameters(p).interaction();
      const MomentumLattice lat(p.L, default_cutoff(p.rho, g, p.T));
      std::vector<double> rho0s{p.rho};
      try {
        rho0s.push_back(solve_condensate(p, g).rho0);
      } catch (const Error&) {
      }
      for (double rho0 : rho0s) {
        worst = std::max(worst, diagonalization_residuals(build_field(lat, {rho0, p.rho, p.T, g})).worst());
        ++fields;
      }
    }
  const MomentumLattice small(2.0 * pi, std::sqrt(8.0));
  for (const Interaction g : {Interaction::constant(1.0), Interaction{1.0, 0.5}}) {
    worst = std::max(worst, diagonalization_residuals(build_field(small, {1.0, 1.0, 1.0, g})).worst());
    ++fields;
  }
  return {worst < 1e-10, fmt("worst_rel=%.2e over %d lattices", worst, fields)};
}

Outcome c5() {
  const auto base = explicit_constant_integral(1.0, 0.01);
  double worst_ratio = rel(base.quadrature, base.closed_form) / 1e-4;
  for (double A : {0.5, 1.0, 2.0})
    for (double kc : {1e-3, 3e-3, 1e-2}) {
      const auto e = explicit_constant_integral(A, kc);
      const double tol = std::max(1e-4, 3.0 * kc / std::sqrt(A));
      worst_ratio = std::max(worst_ratio, rel(e.quadrature, e.closed_form) / tol);
    }
  double worst_alg = 0.0;
  for (double rho_a2 : kRhoA2)
    for (double rho0 : {0.5, 0.8, 1.0}) {
      const double Y = diluteness_Y(rho_a2), d = diluteness_delta(rho_a2);
      const double A = 4.0 * pi * rho0 * d;
      worst_alg = std::max(worst_alg, rel(explicit_constant_physical_form(1.0, rho0, d, Y),
                                          explicit_constant_closed_form(A, explicit_constant_cutoff(1.0, Y))));
    }
  return {worst_ratio <= 1.0 && worst_alg < 1e-12,
          fmt("(1,0.01): quad=%.9f closed=%.9f; worst rel/tol=%.2e; log-algebra rel=%.2e",
              base.quadrature, base.closed_form, worst_ratio, worst_alg)};
}

Outcome c6() {
  double worst_ideal = 0.0;
  for (double T : {0.01, 0.1, 1.0})
    worst_ideal = std::max(worst_ideal, rel(thermal_integral(1.0, 0.0, T), -pi * T * T / 24.0));
  int chains = 0;
  bool chain_ok = true;
  for (double rho_a2 : kRhoA2)
    for (double t : kT) {
      if (t == 0.0) continue;
      const auto p = parameters_at(1.0, rho_a2, t);
      const auto ch = dilog_chain(p.rho, p.delta, p.T);
      chain_ok = chain_ok && ch.lhs <= ch.majorant;
      ++chains;
    }
  const double e1 = std::abs(special::dilog(1.0) - pi * pi / 6.0);
  const double e2 = std::abs(special::dilog(0.5) - (pi * pi / 12.0 - 0.5 * std::pow(std::log(2.0), 2)));
  return {worst_ideal < 1e-8 && chain_ok && e1 < 1e-13 && e2 < 1e-13,
          fmt("ideal_rel=%.2e chain %s on %d points Li2(1) err=%.1e Li2(1/2) err=%.1e", worst_ideal,
              chain_ok ? "holds" : "violated", chains, e1, e2)};
}

Outcome c7() {
  int solved = 0, total = 0;
  double worst = 0.0;
  std::string failures;
  for (double rho_a2 : kRhoA2)
    for (double t : kT) {
      ++total;
      const auto p = parameters_at(1.0, rho_a2, t);
      const Interaction g = SoftPotential::from_parameters(p).interaction();
      try {
        const auto r = solve_condensate(p, g);
        const double res = std::abs(condensate_residual(p, g, r.N0)) / r.N;
        worst = std::max(worst, res);
        if (res < 1e-10) ++solved;
      } catch (const Error& e) {
        failures += fmt(" [%g,%g]:%s R(N/2)/N=%+.3f", rho_a2, t, std::string(to_string(e.code())).c_str(),
                        condensate_residual(p, g, 0.5 * p.particle_number()) / p.particle_number());
      }
    }
  const auto p = parameters_at(1.0, 1e-8, 0.1);
  const auto ideal = solve_condensate(p, Interaction::free());
  const MomentumLattice lat(p.L, default_cutoff(p.rho, Interaction::free(), p.T));
  kernels::Accumulator occ;
  for (std::size_t i = 0; i < lat.shell_count(); ++i)
    occ.add(lat.multiplicity()[i] / std::expm1(lat.p2()[i] / p.T));
  const double ideal_rel = rel(ideal.N0, ideal.N - occ.value());
  return {solved == total && ideal_rel < 1e-14,
          fmt("%d/%d grid points solved, worst rebuilt residual %.1e N; ideal gas rel=%.1e;%s", solved,
              total, worst, ideal_rel, failures.empty() ? "" : (" unsolved:" + failures).c_str())};
}

Outcome c8() {
  bool ok = true;
  double lo[3] = {INFINITY, INFINITY, INFINITY}, hi[3] = {-INFINITY, -INFINITY, -INFINITY};
  for (double rho_a2 : kRhoA2)
    for (double t : kT) {
      const auto p = parameters_at(1.0, rho_a2, t);
      const Interaction g = SoftPotential::from_parameters(p).interaction();
      const MomentumLattice lat(p.L, default_cutoff(p.rho, g, p.T));
      const auto s = lemma_sums(build_field(lat, {p.rho, p.rho, p.T, g}));
      const double N = p.particle_number();
      const double v[3] = {s.S2 / (N * p.Y), s.SC / N, t > 0.0 ? s.Q2 / (N * t) : NAN};
      for (int k = 0; k < 3; ++k) {
        if (std::isnan(v[k])) continue;
        lo[k] = std::min(lo[k], v[k]);
        hi[k] = std::max(hi[k], v[k]);
      }
      ok = ok && kBandS2.contains(v[0]) && kBandSC.contains(v[1]);
      ok = ok && (t > 0.0 ? kBandQ2.contains(v[2]) : s.Q2 == 0.0);
    }
  return {ok, fmt("S2/(NY) in [%.3f,%.3f] band [%.2f,%.2f]; SC/N in [%.3f,%.3f] band [%.2f,%.2f]; "
                  "Q2/(N t) in [%.3f,%.3f] band [%.2f,%.2f]",
                  lo[0], hi[0], kBandS2.lo, kBandS2.hi, lo[1], hi[1], kBandSC.lo, kBandSC.hi, lo[2],
                  hi[2], kBandQ2.lo, kBandQ2.hi)};
}

Outcome c9() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = default_sum_vs_integral();
  const double t = seconds_since(t0);
  return {table.slope >= -1.6 && table.slope <= -0.9 && t < 60.0,
          fmt("slope=%.4f over %zu box sizes time=%.3fs", table.slope, table.rows.size(), t)};
}

Outcome c10() {
  const auto ev = eigenvalue_difference_suite(7);
  const auto fa = fannes_suite(7);
  auto failures = [](const std::vector<CaseResult>& v) {
    return std::count_if(v.begin(), v.end(), [](const CaseResult& r) { return !r.holds; });
  };
  int max_dim = 0;
  for (const auto& c : ev) max_dim = std::max(max_dim, c.dim);
  for (const auto& c : fa) max_dim = std::max(max_dim, c.dim);
  double worst = 0.0;
  for (double x : {0.1, 1.0, 5.0})
    for (int M : {1, 3, 10}) {
      double s = 0.0, w = 0.0;
      for (int n = 20000 + M; n >= M; --n) {
        s += std::exp(-x * n);
        w += n * std::exp(-x * n);
      }
      worst = std::max({worst, rel(geometric_tail(x, M), s), rel(geometric_weighted_tail(x, M), w)});
    }
  const long fe = failures(ev), ff = failures(fa);
  return {ev.size() == 200 && fa.size() == 200 && fe == 0 && ff == 0 && max_dim <= 64 && worst < 1e-13,
          fmt("eigenvalue-difference %zu cases %ld failures; Fannes %zu cases %ld failures; max dim %d; "
              "geometric tail rel=%.1e",
              ev.size(), fe, fa.size(), ff, max_dim, worst)};
}

Outcome c11() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = fock_checks();
  const double t = seconds_since(t0);
  int failed = 0;
  std::string names;
  for (const auto& c : checks)
    if (!c.pass) {
      ++failed;
      names += " " + c.name;
    }
  return {failed == 0 && t < 120.0,
          fmt("%zu checks, %d failed%s time=%.1fs", checks.size(), failed, names.c_str(), t)};
}

struct Captured {
  std::string out;
  int code = -1;
};

Captured capture(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Outcome c12(const std::string& cli) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cli.empty()) {
    const auto ca = run_suite("all", 7);
    const auto cb = run_suite("all", 7);
    const bool same = format_checks(ca) == format_checks(cb);
    const double t = seconds_since(t0);
    return {all_pass(ca) && all_pass(cb) && same && t < 300.0,
            fmt("library run, %zu checks, outputs %s, two runs %.1fs", ca.size(),
                same ? "identical" : "differ", t)};
  }
  const std::string cmd = cli + " verify --suite all --seed 7 2>&1";
  const auto a = capture(cmd);
  const auto b = capture(cmd);
  const double t = seconds_since(t0);
  return {a.code == 0 && b.code == 0 && a.out == b.out && t < 300.0,
          fmt("exit codes %d/%d, outputs %s (%zu bytes), two runs %.1fs", a.code, b.code,
              a.out == b.out ? "identical" : "differ", a.out.size(), t)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string cli;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 12));
  app.add_option("--cli", cli, "path of the command-line tool for the end-to-end criterion");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"scattering closed form", c1},
      {"Fourier identities", c2},
      {"singular integral", c3},
      {"diagonalization identities", c4},
      {"explicit constant integral", c5},
      {"thermal integral and dilogarithm", c6},
      {"condensate fixed point", c7},
      {"lemma-sum bands", c8},
      {"sum against integral", c9},
      {"entropy inequalities", c10},
      {"Fock space oracle", c11},
      {"end-to-end determinism", [&] { return c12(cli); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && int(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %2zu %-34s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
