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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "bose2d/params.hpp"
#include "bose2d/softpot.hpp"

namespace bose2d {

/// Which implementation of the shell kernels to run.
enum class Backend { Serial, OpenMP };

/// Nonzero momenta (2 pi / L) Z^2 with |p| <= cutoff, grouped into shells of
/// equal |p|^2. Shell k holds r2(k) points with p^2 = (2 pi / L)^2 k, stored in
/// increasing k.
class MomentumLattice {
 public:
  MomentumLattice(double L, double cutoff);

  double L() const { return L_; }
  double cutoff() const { return cutoff_; }
  double spacing() const;
  std::size_t shell_count() const { return k_.size(); }
  std::size_t point_count() const { return points_; }

  std::span<const std::uint64_t> shell_index() const { return k_; }
  std::span<const std::uint32_t> multiplicity() const { return mult_; }
  std::span<const double> p2() const { return p2_; }

  /// Every point as integer coordinates, sorted by radius and then
  /// lexicographically. Meant for small lattices.
  std::vector<std::array<int, 2>> points() const;
  /// Largest |m| or |n| among the points.
  int max_coordinate() const;

 private:
  double L_, cutoff_;
  std::size_t points_ = 0;
  std::vector<std::uint64_t> k_;
  std::vector<std::uint32_t> mult_;
  std::vector<double> p2_;
};

/// max(8 sqrt(rho0 g(0)), sqrt(40 T)).
double default_cutoff(double rho0, const Interaction& g, double T);

/// What the field is built from: the condensate density, the total density
/// (which fixes the reference gap 2 rho g(0) of D0), the temperature and the
/// interaction.
struct FieldSpec {
  double rho0 = 0.0;
  double rho = 0.0;
  double T = 0.0;
  Interaction g;
};

/// Per-shell Bogoliubov data, stored as parallel arrays.
struct BogoliubovField {
  FieldSpec spec;
  const MomentumLattice* lattice = nullptr;
  std::vector<double> ghat, c, s, D, D0, n;

  double beta() const { return spec.T > 0.0 ? 1.0 / spec.T : std::numeric_limits<double>::infinity(); }
};

/// Throws NonPositiveDispersion when p^4 + 2 p^2 rho0 g(p) <= 0 on a shell.
BogoliubovField build_field(const MomentumLattice& lattice, const FieldSpec& spec,
                            Backend backend = Backend::OpenMP);

/// Occupation (e^{beta D0} - 1)^{-1}, zero at T = 0.
double bose_occupation(double D0, double T);

/// Worst pointwise violations over a field: |c^2 - s^2 - 1|, and relative
/// errors of c s = -rho0 g / (2 D) and of the two quadratic-form identities
/// (x (s^2 + c^2) + 2 rho0 g c s = D and
/// p^2 s^2 + rho0 g s^2 + rho0 g s c = (D - x) / 2, with x = p^2 + rho0 g).
/// Relative errors are scaled by the sum of the absolute terms.
struct IdentityResiduals {
  double hyperbolic = 0.0;
  double product = 0.0;
  double quadratic = 0.0;
  double half_gap = 0.0;
  double worst() const;
};
IdentityResiduals diagonalization_residuals(const BogoliubovField& field);

struct SumOptions {
  /// Add the continuum integrals of s^2 and |s c| beyond the cutoff.
  bool continuum_tail = true;
  /// Largest allowed share of Q2 carried by the outermost shell.
  double thermal_tail_tol = 1e-12;
  Backend backend = Backend::OpenMP;
};

struct LemmaSums {
  double S2 = 0.0;       // lattice part plus tail
  double SC = 0.0;
  double Q2 = 0.0;
  double S2_tail = 0.0;  // continuum share beyond the cutoff
  double SC_tail = 0.0;
};

LemmaSums lemma_sums(const BogoliubovField& field, const SumOptions& opts = {});

/// Point-by-point sums over the explicit lattice points, with c and s rebuilt
/// as cosh and sinh of phi = atanh(-rho0 g / (p^2 + rho0 g)) / 2. No tails.
LemmaSums lemma_sums_reference(const MomentumLattice& lattice, const FieldSpec& spec);

/// Continuum tails (L^2 / 2 pi) int_P^inf f(p) p dp for f = s^2 and f = |s c|.
double s2_continuum_tail(double L, double P, double rho0, const Interaction& g);
double sc_continuum_tail(double L, double P, double rho0, const Interaction& g);

struct CondensateOptions {
  double tol = 1e-12;        // residual target relative to N
  double max_T_over_Tc = 1.0;
  SumOptions sums;
  int max_iterations = 200;
};

struct CondensateResult {
  double N = 0.0;
  double N0 = 0.0;
  double rho0 = 0.0;
  double residual = 0.0;       // N0 + S2 + Q2 - N from the solver's own path
  double ideal_occupation = 0.0;  // sum n_p, a lower bound for Q2
  int iterations = 0;
  double cutoff = 0.0;
  std::size_t shells = 0;
  std::size_t points = 0;
  bool T_below_rho = true;
  LemmaSums sums;
};

/// Solves N0 + S2(N0) + Q2(N0) = N on the box of `params` by bisection on
/// [N/2, N] and a final secant step. Throws NoCondensateSolution when the
/// residual has no sign change there.
CondensateResult solve_condensate(const GasParameters& params, const Interaction& g,
                                  const CondensateOptions& opts = {});

/// Residual N0 + S2 + Q2 - N from a fresh lattice and field build.
double condensate_residual(const GasParameters& params, const Interaction& g, double N0,
                           const SumOptions& opts = {});

/// (1 / 2 L^2) sum_{p != q} g(q - p) c_p s_p c_q s_q over the points of the
/// field's lattice. `closed_form` uses -rho0 g / (2 D) for c s.
double interaction_convolution(const BogoliubovField& field, bool closed_form = false);
/// Naive quadruple loop over integer coordinates, evaluating g directly.
double interaction_convolution_reference(const BogoliubovField& field);

struct SumIntegralRow {
  double L = 0.0;
  double lattice = 0.0;   // L^{-2} sum log(1 - e^{-beta D0})
  double integral = 0.0;  // (2 pi)^{-2} int log(1 - e^{-beta D0}) d^2p
  double error = 0.0;
};

struct SumIntegralTable {
  std::vector<SumIntegralRow> rows;
  double slope = 0.0;  // least-squares slope of log error against log L
};

SumIntegralTable sum_vs_integral(double rho, double delta, double T, std::span<const double> Ls,
                                 Backend backend = Backend::OpenMP);

/// The default sweep: rho = 1, rho a^2 = 1e-10, T = T_c / 10 and
/// L = 2 l {1, 2, 4, 8} with l = (rho delta)^{-1/2}.
SumIntegralTable default_sum_vs_integral();

/// Frozen regression bands for the lemma-sum ratios S2 / (N Y), SC / N and
/// Q2 / (N T / T_c), evaluated with rho0 = rho on the box L = rho^{-1/2} Y^{-5/2}
/// for rho a^2 in {1e-6, 1e-8, 1e-10} and T / T_c in {0, 0.1, 0.5}. The
/// measured ranges were [0.833, 0.879], [0.537, 0.548] and [1.93, 2.72].
struct RegressionBand {
  double lo, hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
};
inline constexpr RegressionBand kBandS2{0.75, 1.0};
inline constexpr RegressionBand kBandSC{0.45, 0.6};
inline constexpr RegressionBand kBandQ2{1.7, 3.0};

/// "L,S2,SC,Q2,N0,residual" and one row per result.
void write_diagnostics_header(std::ostream& os);
void write_diagnostics_row(std::ostream& os, double L, const CondensateResult& r);

}  // namespace bose2d
