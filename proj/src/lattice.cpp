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

#include "bose2d/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <unordered_map>

#include "bose2d/error.hpp"
#include "bose2d/freeenergy.hpp"
#include "bose2d/kernels.hpp"
#include "bose2d/quadrature.hpp"
#include "bose2d/special.hpp"

namespace bose2d {

using std::numbers::pi;

namespace {

constexpr std::uint64_t kMaxShellIndex = 400'000'000;
constexpr std::size_t kMaxConvolutionPoints = 200'000;

std::size_t shell_of(const MomentumLattice& lat, std::uint64_t k) {
  const auto idx = lat.shell_index();
  const auto it = std::lower_bound(idx.begin(), idx.end(), k);
  return std::size_t(it - idx.begin());
}

// Breakpoints on [lo, hi]: the zeros of J0(b p) and a geometric ladder.
std::vector<double> tail_nodes(double lo, double hi, double b) {
  std::vector<double> nodes{lo};
  for (double p = lo * 4.0; p < hi; p *= 4.0) nodes.push_back(p);
  if (b > 0.0) {
    int k = std::max(1, int(std::floor(b * lo / pi)) - 1);
    for (double z = special::bessel_j0_zero(k); z < b * hi; z = special::bessel_j0_zero(++k))
      if (z > b * lo) nodes.push_back(z / b);
  }
  nodes.push_back(hi);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

// Upper end of the explicit tail integration. Past it D = p^2 to 1e-8 and
// J0(b p) is in its asymptotic regime.
double tail_split(double P, double A, double b) {
  double p1 = std::max(P, 1e4 * std::sqrt(std::abs(A)));
  if (b > 0.0) p1 = std::max(p1, 50.0 / b);
  return p1;
}

}  // namespace

// ------------------------------------------------------------- lattice

MomentumLattice::MomentumLattice(double L, double cutoff) : L_(L), cutoff_(cutoff) {
  constexpr const char* where = "bogolattice::MomentumLattice";
  if (!(L > 0.0) || !(cutoff > 0.0))
    throw Error(ErrorCode::InvalidArgument, where, "L and cutoff must be positive");
  const double kmax_real = std::pow(cutoff / spacing(), 2);
  if (kmax_real > double(kMaxShellIndex))
    throw Error(ErrorCode::InvalidArgument, where, "lattice too large");
  const auto K = std::uint64_t(std::floor(kmax_real * (1.0 + 1e-14)));
  if (K == 0) throw Error(ErrorCode::CutoffTooSmall, where, "no nonzero momentum below cutoff");
  std::vector<std::uint32_t> count(K + 1, 0);
  // (m, n) with m >= 1, n >= 0 and its three quarter-turn images cover every
  // nonzero point exactly once.
  for (std::uint64_t m = 1; m * m <= K; ++m)
    for (std::uint64_t n = 0; m * m + n * n <= K; ++n) count[m * m + n * n] += 4;
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (count[k] == 0) continue;
    k_.push_back(k);
    mult_.push_back(count[k]);
    points_ += count[k];
  }
  const double h2 = spacing() * spacing();
  p2_.resize(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) p2_[i] = h2 * double(k_[i]);
}

double MomentumLattice::spacing() const { return 2.0 * pi / L_; }

int MomentumLattice::max_coordinate() const {
  return int(std::floor(std::sqrt(double(k_.back())) + 1e-9));
}

std::vector<std::array<int, 2>> MomentumLattice::points() const {
  const int M = max_coordinate();
  const auto K = std::int64_t(k_.back());
  std::vector<std::array<int, 2>> pts;
  pts.reserve(points_);
  for (int m = -M; m <= M; ++m)
    for (int n = -M; n <= M; ++n) {
      const std::int64_t k = std::int64_t(m) * m + std::int64_t(n) * n;
      if (k > 0 && k <= K) pts.push_back({m, n});
    }
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    const long kx = long(x[0]) * x[0] + long(x[1]) * x[1];
    const long ky = long(y[0]) * y[0] + long(y[1]) * y[1];
    return kx != ky ? kx < ky : x < y;
  });
  return pts;
}

double default_cutoff(double rho0, const Interaction& g, double T) {
  return std::max(8.0 * std::sqrt(std::max(rho0 * g.g0, 0.0)), std::sqrt(40.0 * T));
}

// ------------------------------------------------------------- field

double bose_occupation(double D0, double T) {
  if (T <= 0.0) return 0.0;
  return 1.0 / std::expm1(D0 / T);
}

BogoliubovField build_field(const MomentumLattice& lattice, const FieldSpec& spec,
                            Backend backend) {
  constexpr const char* where = "bogolattice::build_field";
  if (spec.rho0 < 0.0 || spec.rho < 0.0 || spec.T < 0.0)
    throw Error(ErrorCode::NegativeInput, where, "rho0, rho and T must be nonnegative");
  BogoliubovField f;
  f.spec = spec;
  f.lattice = &lattice;
  const auto p2 = lattice.p2();
  const std::ptrdiff_t n = std::ptrdiff_t(p2.size());
  f.ghat.resize(std::size_t(n));
  f.D0.resize(std::size_t(n));
  f.n.resize(std::size_t(n));
  f.c.resize(std::size_t(n));
  f.s.resize(std::size_t(n));
  f.D.resize(std::size_t(n));
  const double gap = 2.0 * spec.rho * spec.g.g0;
#pragma omp parallel for schedule(static) if (backend == Backend::OpenMP)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double q2 = p2[std::size_t(i)];
    f.ghat[std::size_t(i)] = spec.g(std::sqrt(q2));
    f.D0[std::size_t(i)] = std::sqrt(q2 * (q2 + gap));
    f.n[std::size_t(i)] = bose_occupation(f.D0[std::size_t(i)], spec.T);
  }
  const kernels::CoefficientArrays out{f.c, f.s, f.D};
  const auto bad = backend == Backend::OpenMP
                       ? kernels::omp::bogoliubov_coefficients(p2, f.ghat, spec.rho0, out)
                       : kernels::serial::bogoliubov_coefficients(p2, f.ghat, spec.rho0, out);
  if (bad >= 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "p^4 + 2 p^2 rho0 g(p) <= 0 at p^2 = %.9g",
                  p2[std::size_t(bad)]);
    throw Error(ErrorCode::NonPositiveDispersion, where, buf);
  }
  return f;
}

double IdentityResiduals::worst() const {
  return std::max({hyperbolic, product, quadratic, half_gap});
}

IdentityResiduals diagonalization_residuals(const BogoliubovField& f) {
  IdentityResiduals r;
  const auto p2 = f.lattice->p2();
  const double rho0 = f.spec.rho0;
  for (std::size_t i = 0; i < p2.size(); ++i) {
    const double c = f.c[i], s = f.s[i], D = f.D[i], rg = rho0 * f.ghat[i];
    const double x = p2[i] + rg;
    r.hyperbolic = std::max(r.hyperbolic, std::abs(c * c - s * s - 1.0));
    const double prod = -rg / (2.0 * D);
    r.product = std::max(r.product, std::abs(c * s - prod) / std::max(std::abs(prod), 1e-300));
    const double t1 = x * (s * s + c * c), t2 = 2.0 * rg * c * s;
    r.quadratic = std::max(r.quadratic,
                           std::abs(t1 + t2 - D) / (std::abs(t1) + std::abs(t2) + D));
    const double u1 = p2[i] * s * s, u2 = rg * s * s, u3 = rg * s * c;
    const double rhs = 0.5 * (D - x);
    const double scale = std::abs(u1) + std::abs(u2) + std::abs(u3) + 0.5 * (D + std::abs(x));
    r.half_gap = std::max(r.half_gap, std::abs(u1 + u2 + u3 - rhs) / scale);
  }
  return r;
}

// ------------------------------------------------------------- sums

double s2_continuum_tail(double L, double P, double rho0, const Interaction& g) {
  constexpr const char* where = "bogolattice::s2_continuum_tail";
  const double A = rho0 * g.g0;
  if (A == 0.0) return 0.0;
  auto f = [&](double p) {
    const double q2 = p * p, rg = rho0 * g(p);
    const double disc = q2 * (q2 + 2.0 * rg);
    if (!(disc > 0.0))
      throw Error(ErrorCode::NonPositiveDispersion, where, "dispersion vanishes in the tail");
    const double D = std::sqrt(disc);
    return p * rg * rg / (2.0 * D * (q2 + rg + D));
  };
  const double p1 = tail_split(P, A, g.b);
  const auto r = quad::integrate_pieces(f, tail_nodes(P, p1, g.b), 0.0, 1e-11);
  if (!r.converged)
    throw Error(ErrorCode::QuadratureNonconvergence, where, "tail quadrature did not settle");
  // Beyond p1: A^2 J0(bp)^2 / (4 p^3), with J0^2 ~ 1 / (pi b p) on average.
  double far = A * A / (8.0 * p1 * p1);
  if (g.b > 0.0) far = A * A / (4.0 * pi * g.b * 3.0 * p1 * p1 * p1);
  return L * L / (2.0 * pi) * (r.value + far);
}

double sc_continuum_tail(double L, double P, double rho0, const Interaction& g) {
  constexpr const char* where = "bogolattice::sc_continuum_tail";
  const double A = rho0 * g.g0;
  if (A == 0.0) return 0.0;
  // sum |c s| ~ A / (2 p^2) diverges logarithmically without the J0 decay.
  if (g.b <= 0.0) return INFINITY;
  auto f = [&](double p) {
    const double q2 = p * p, rg = rho0 * g(p);
    const double disc = q2 * (q2 + 2.0 * rg);
    if (!(disc > 0.0))
      throw Error(ErrorCode::NonPositiveDispersion, where, "dispersion vanishes in the tail");
    return p * std::abs(rg) / (2.0 * std::sqrt(disc));
  };
  const double p1 = tail_split(P, A, g.b);
  const auto r = quad::integrate_pieces(f, tail_nodes(P, p1, g.b), 0.0, 1e-11);
  if (!r.converged)
    throw Error(ErrorCode::QuadratureNonconvergence, where, "tail quadrature did not settle");
  const double far = 0.5 * std::abs(A) * abs_j0_tail_moment(g.b * p1, 1e-11);
  return L * L / (2.0 * pi) * (r.value + far);
}

LemmaSums lemma_sums(const BogoliubovField& field, const SumOptions& opts) {
  const MomentumLattice& lat = *field.lattice;
  const auto mult = lat.multiplicity();
  const auto t = opts.backend == Backend::OpenMP
                     ? kernels::omp::lemma_sums(mult, field.c, field.s, field.n)
                     : kernels::serial::lemma_sums(mult, field.c, field.s, field.n);
  LemmaSums out{t.s2, t.sc, t.q2, 0.0, 0.0};
  if (out.Q2 > 0.0) {
    const std::size_t last = mult.size() - 1;
    const double edge = mult[last] *
                        (field.s[last] * field.s[last] + field.c[last] * field.c[last]) *
                        field.n[last];
    if (edge > opts.thermal_tail_tol * out.Q2)
      throw Error(ErrorCode::CutoffTooSmall, "bogolattice::lemma_sums",
                  "outermost shell carries too much of the thermal sum");
  }
  if (opts.continuum_tail) {
    out.S2_tail = s2_continuum_tail(lat.L(), lat.cutoff(), field.spec.rho0, field.spec.g);
    out.SC_tail = sc_continuum_tail(lat.L(), lat.cutoff(), field.spec.rho0, field.spec.g);
    out.S2 += out.S2_tail;
    out.SC += out.SC_tail;
  }
  return out;
}

LemmaSums lemma_sums_reference(const MomentumLattice& lattice, const FieldSpec& spec) {
  const double h = lattice.spacing();
  const double gap = 2.0 * spec.rho * spec.g.g0;
  kernels::Accumulator s2, sc, q2;
  for (const auto& pt : lattice.points()) {
    const double q2v = h * h * (double(pt[0]) * pt[0] + double(pt[1]) * pt[1]);
    const double rg = spec.rho0 * spec.g(std::sqrt(q2v));
    const double phi = 0.5 * std::atanh(-rg / (q2v + rg));
    const double c = std::cosh(phi), s = std::sinh(phi);
    const double n = bose_occupation(std::sqrt(q2v * (q2v + gap)), spec.T);
    s2.add(s * s);
    sc.add(std::abs(s * c));
    q2.add((s * s + c * c) * n);
  }
  return {s2.value(), sc.value(), q2.value(), 0.0, 0.0};
}

// ------------------------------------------------------------- condensate

namespace {

struct ThermalShells {
  MomentumLattice lattice;
  std::vector<double> ghat, n;
};

ThermalShells prepare_shells(const GasParameters& p, const Interaction& g) {
  // A free gas at T = 0 has a zero natural cutoff; keep the first two shells.
  const double floor = 1.5 * 2.0 * std::numbers::pi / p.L;
  ThermalShells t{MomentumLattice(p.L, std::max(default_cutoff(p.rho, g, p.T), floor)), {}, {}};
  const auto p2 = t.lattice.p2();
  t.ghat.resize(p2.size());
  t.n.resize(p2.size());
  const double gap = 2.0 * p.rho * g.g0;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(p2.size()); ++i) {
    const double q2 = p2[std::size_t(i)];
    t.ghat[std::size_t(i)] = g(std::sqrt(q2));
    t.n[std::size_t(i)] = bose_occupation(std::sqrt(q2 * (q2 + gap)), p.T);
  }
  return t;
}

}  // namespace

CondensateResult solve_condensate(const GasParameters& p, const Interaction& g,
                                  const CondensateOptions& opts) {
  constexpr const char* where = "bogolattice::solve_condensate";
  if (p.T > opts.max_T_over_Tc * p.Tc)
    throw Error(ErrorCode::DomainError, where, "temperature above the configured T/T_c limit");
  const ThermalShells shells = prepare_shells(p, g);
  const MomentumLattice& lat = shells.lattice;
  const double L2 = p.L * p.L;
  CondensateResult res;
  res.N = p.particle_number();
  res.cutoff = lat.cutoff();
  res.shells = lat.shell_count();
  res.points = lat.point_count();
  res.T_below_rho = p.T <= p.rho;
  {
    kernels::Accumulator acc;
    const auto mult = lat.multiplicity();
    for (std::size_t i = 0; i < mult.size(); ++i) acc.add(mult[i] * shells.n[i]);
    res.ideal_occupation = acc.value();
  }
  const double N = res.N;
  auto residual = [&](double N0) {
    const double rho0 = N0 / L2;
    const auto r = opts.sums.backend == Backend::OpenMP
                       ? kernels::omp::residual_sums(lat.multiplicity(), lat.p2(), shells.ghat,
                                                     shells.n, rho0)
                       : kernels::serial::residual_sums(lat.multiplicity(), lat.p2(),
                                                        shells.ghat, shells.n, rho0);
    if (!std::isfinite(r.s2) || !std::isfinite(r.q2))
      throw Error(ErrorCode::NonPositiveDispersion, where, "dispersion vanishes on the lattice");
    double s2 = r.s2;
    if (opts.sums.continuum_tail) s2 += s2_continuum_tail(p.L, lat.cutoff(), rho0, g);
    return N0 + s2 + r.q2 - N;
  };

  double hi = N, lo = 0.5 * N;
  double r_hi = residual(hi);
  double N0 = hi, r0 = r_hi;
  int it = 1;
  if (r_hi > 0.0) {
    double r_lo = residual(lo);
    ++it;
    if (r_lo > 0.0) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "residual positive at N0 = N/2 (%.6g N); thermal occupation alone is %.6g N",
                    r_lo / N, res.ideal_occupation / N);
      throw Error(ErrorCode::NoCondensateSolution, where, buf);
    }
    N0 = lo;
    r0 = r_lo;
    while (std::abs(r0) > opts.tol * N && hi - lo > 4e-16 * N && it < opts.max_iterations) {
      const double mid = 0.5 * (lo + hi);
      const double rm = residual(mid);
      ++it;
      if (rm > 0.0) {
        hi = mid;
        r_hi = rm;
      } else {
        lo = mid;
        r_lo = rm;
      }
      N0 = std::abs(r_lo) < std::abs(r_hi) ? lo : hi;
      r0 = std::abs(r_lo) < std::abs(r_hi) ? r_lo : r_hi;
    }
    // One secant step across the final bracket.
    if (r_hi != r_lo) {
      const double x = lo - r_lo * (hi - lo) / (r_hi - r_lo);
      if (x >= lo && x <= hi) {
        const double rx = residual(x);
        ++it;
        if (std::abs(rx) <= std::abs(r0)) {
          N0 = x;
          r0 = rx;
        }
      }
    }
  }
  res.N0 = N0;
  res.rho0 = N0 / L2;
  res.residual = r0;
  res.iterations = it;
  const auto field = build_field(lat, {res.rho0, p.rho, p.T, g}, opts.sums.backend);
  res.sums = lemma_sums(field, opts.sums);
  return res;
}

double condensate_residual(const GasParameters& p, const Interaction& g, double N0,
                           const SumOptions& opts) {
  const MomentumLattice lat(p.L, default_cutoff(p.rho, g, p.T));
  const auto field = build_field(lat, {N0 / (p.L * p.L), p.rho, p.T, g}, opts.backend);
  const auto s = lemma_sums(field, opts);
  return N0 + s.S2 + s.Q2 - p.particle_number();
}

// ------------------------------------------------------------- convolution

double interaction_convolution(const BogoliubovField& field, bool closed_form) {
  const MomentumLattice& lat = *field.lattice;
  if (lat.point_count() > kMaxConvolutionPoints)
    throw Error(ErrorCode::InvalidArgument, "bogolattice::interaction_convolution",
                "too many lattice points for the pair sum");
  const auto pts = lat.points();
  std::vector<int> m(pts.size()), n(pts.size());
  std::vector<double> w(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    m[i] = pts[i][0];
    n[i] = pts[i][1];
    const auto k = std::uint64_t(long(m[i]) * m[i] + long(n[i]) * n[i]);
    const std::size_t sh = shell_of(lat, k);
    w[i] = closed_form ? -field.spec.rho0 * field.ghat[sh] / (2.0 * field.D[sh])
                       : field.c[sh] * field.s[sh];
  }
  const int M = lat.max_coordinate();
  const int width = 4 * M + 1;
  std::vector<double> table(std::size_t(width) * std::size_t(width));
  const double h = lat.spacing();
#pragma omp parallel for schedule(static)
  for (int dm = -2 * M; dm <= 2 * M; ++dm)
    for (int dn = -2 * M; dn <= 2 * M; ++dn)
      table[std::size_t((dm + 2 * M) * width + dn + 2 * M)] =
          field.spec.g(h * std::sqrt(double(dm) * dm + double(dn) * dn));
  const double L = lat.L();
  return kernels::omp::pair_convolution(m, n, w, table, M) / (2.0 * L * L);
}

double interaction_convolution_reference(const BogoliubovField& field) {
  const MomentumLattice& lat = *field.lattice;
  const int M = lat.max_coordinate();
  const auto K = long(lat.shell_index().back());
  std::unordered_map<long, double> cs;
  for (std::size_t i = 0; i < lat.shell_count(); ++i)
    cs[long(lat.shell_index()[i])] = field.c[i] * field.s[i];
  const double h = lat.spacing();
  kernels::Accumulator acc;
  for (int m1 = -M; m1 <= M; ++m1)
    for (int n1 = -M; n1 <= M; ++n1) {
      const long k1 = long(m1) * m1 + long(n1) * n1;
      if (k1 == 0 || k1 > K) continue;
      for (int m2 = -M; m2 <= M; ++m2)
        for (int n2 = -M; n2 <= M; ++n2) {
          const long k2 = long(m2) * m2 + long(n2) * n2;
          if (k2 == 0 || k2 > K || (m1 == m2 && n1 == n2)) continue;
          const double dm = m2 - m1, dn = n2 - n1;
          acc.add(field.spec.g(h * std::sqrt(dm * dm + dn * dn)) * cs[k1] * cs[k2]);
        }
    }
  const double L = lat.L();
  return acc.value() / (2.0 * L * L);
}

// ------------------------------------------------------------- sum vs integral

SumIntegralTable sum_vs_integral(double rho, double delta, double T, std::span<const double> Ls,
                                 Backend backend) {
  if (Ls.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "bogolattice::sum_vs_integral",
                "need at least two box sizes");
  SumIntegralTable table;
  const double integral = T > 0.0 ? thermal_integral(rho, delta, T) / T : 0.0;
  const double gap = 8.0 * pi * rho * delta;
  for (double L : Ls) {
    SumIntegralRow row;
    row.L = L;
    row.integral = integral;
    if (T > 0.0) {
      // log(1 - e^{-60}) is below 1e-26.
      const MomentumLattice lat(L, std::sqrt(60.0 * T));
      std::vector<double> D0(lat.shell_count());
      const auto p2 = lat.p2();
      for (std::size_t i = 0; i < D0.size(); ++i) D0[i] = std::sqrt(p2[i] * (p2[i] + gap));
      const double s = backend == Backend::OpenMP
                           ? kernels::omp::thermal_log_sum(lat.multiplicity(), D0, 1.0 / T)
                           : kernels::serial::thermal_log_sum(lat.multiplicity(), D0, 1.0 / T);
      row.lattice = s / (L * L);
    }
    row.error = std::abs(row.lattice - row.integral);
    table.rows.push_back(row);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(table.rows.size());
  for (const auto& r : table.rows) {
    const double x = std::log(r.L), y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  table.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return table;
}

SumIntegralTable default_sum_vs_integral() {
  const double rho = 1.0;
  const double delta = diluteness_delta(1e-10);
  const double T = 0.1 * critical_temperature(rho, delta);
  const double l = 1.0 / std::sqrt(rho * delta);
  const std::vector<double> Ls{2.0 * l, 4.0 * l, 8.0 * l, 16.0 * l};
  return sum_vs_integral(rho, delta, T, Ls);
}

// ------------------------------------------------------------- CSV

void write_diagnostics_header(std::ostream& os) { os << "L,S2,SC,Q2,N0,residual\n"; }

void write_diagnostics_row(std::ostream& os, double L, const CondensateResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", L, r.sums.S2,
                r.sums.SC, r.sums.Q2, r.N0, r.residual);
  os << buf;
}

}  // namespace bose2d
