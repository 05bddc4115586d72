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

#include "bose2d/scattering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "bose2d/error.hpp"

namespace bose2d {

// ---------------------------------------------------------------- potential

RadialPotential RadialPotential::soft_disk(double v0, double R0) {
  if (!(v0 >= 0.0) || !(R0 > 0.0))
    throw Error(ErrorCode::InvalidArgument, "scattering::soft_disk", "need v0 >= 0 and R0 > 0");
  RadialPotential p;
  p.kind_ = Kind::SoftDisk;
  p.v0_ = v0;
  p.support_ = R0;
  return p;
}

RadialPotential RadialPotential::zero(double R0) { return soft_disk(0.0, R0); }

RadialPotential RadialPotential::table(std::vector<double> r, std::vector<double> v) {
  constexpr const char* where = "scattering::table";
  if (r.size() != v.size() || r.size() < 2)
    throw Error(ErrorCode::InvalidArgument, where, "need at least two (r, v) rows");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(v[i] >= 0.0)) throw Error(ErrorCode::InvalidArgument, where, "v must be nonnegative");
    if (!(r[i] >= 0.0)) throw Error(ErrorCode::InvalidArgument, where, "radii must be nonnegative");
    if (i > 0 && !(r[i] > r[i - 1]))
      throw Error(ErrorCode::InvalidArgument, where, "radii must be strictly increasing");
  }
  RadialPotential p;
  p.kind_ = Kind::Table;
  std::size_t last = r.size() - 1;
  while (last > 0 && v[last] == 0.0 && v[last - 1] == 0.0) --last;
  r.resize(last + 1);
  v.resize(last + 1);
  p.support_ = r.back();
  p.r_ = std::move(r);
  p.v_ = std::move(v);
  if (p.support_ <= 0.0) throw Error(ErrorCode::InvalidArgument, where, "empty support");
  return p;
}

double RadialPotential::operator()(double r) const {
  if (kind_ == Kind::SoftDisk) return r <= support_ ? v0_ : 0.0;
  if (r > r_.back()) return 0.0;
  if (r <= r_.front()) return v_.front();
  const auto it = std::upper_bound(r_.begin(), r_.end(), r);
  const std::size_t i = std::size_t(it - r_.begin());
  const double t = (r - r_[i - 1]) / (r_[i] - r_[i - 1]);
  return v_[i - 1] + t * (v_[i] - v_[i - 1]);
}

double RadialPotential::inside(double r, double lo, double hi) const {
  double x = std::clamp(r, lo, hi);
  if (x >= hi) x = std::nextafter(hi, lo);
  if (x <= lo) x = std::nextafter(lo, hi);
  return (*this)(x);
}

std::vector<double> RadialPotential::breakpoints() const {
  if (kind_ == Kind::SoftDisk) return {support_};
  std::vector<double> out;
  for (double x : r_)
    if (x > 0.0) out.push_back(x);
  return out;
}

bool RadialPotential::is_zero() const {
  if (kind_ == Kind::SoftDisk) return v0_ == 0.0;
  return std::all_of(v_.begin(), v_.end(), [](double x) { return x == 0.0; });
}

RadialPotential RadialPotential::scaled(double lambda) const {
  if (!(lambda > 0.0))
    throw Error(ErrorCode::InvalidArgument, "scattering::scaled", "lambda must be positive");
  if (kind_ == Kind::SoftDisk) return soft_disk(v0_ / (lambda * lambda), support_ * lambda);
  std::vector<double> r = r_, v = v_;
  for (auto& x : r) x *= lambda;
  for (auto& x : v) x /= lambda * lambda;
  return table(std::move(r), std::move(v));
}

RadialPotential RadialPotential::with_radius_unit(double unit) const {
  if (!(unit > 0.0))
    throw Error(ErrorCode::InvalidArgument, "scattering::with_radius_unit", "unit must be positive");
  if (kind_ == Kind::SoftDisk) return soft_disk(v0_, support_ * unit);
  std::vector<double> r = r_;
  for (auto& x : r) x *= unit;
  return table(std::move(r), v_);
}

RadialPotential read_potential_table(std::istream& in) {
  std::vector<double> r, v;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    double x = 0.0, y = 0.0;
    if (!(ss >> x >> y)) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw Error(ErrorCode::ParseError, "scattering::read_potential_table",
                  "cannot parse line: " + line);
    }
    first = false;
    r.push_back(x);
    v.push_back(y);
  }
  return RadialPotential::table(std::move(r), std::move(v));
}

RadialPotential load_potential_table(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "scattering::load_potential_table", "cannot open " + path);
  return read_potential_table(in);
}

// ---------------------------------------------------------------- ODE

namespace {

using State = std::array<double, 2>;

struct Rhs {
  const RadialPotential& v;
  double lo, hi;
  State operator()(double r, const State& y) const {
    return {y[1], 0.5 * v.inside(r, lo, hi) * y[0] - y[1] / r};
  }
};

// Dormand-Prince 5(4) across one mesh cell with adaptive substeps.
State dopri_cell(const Rhs& f, double r0, double r1, State y, double rtol) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double r = r0;
  double h = r1 - r0;
  int steps = 0;
  while (r < r1) {
    if (++steps > 100000 || !(h > 0.0) || h < 1e-15 * r1)
      throw Error(ErrorCode::SolverDivergence, "scattering::solve_scattering",
                  "step size control failed");
    if (r + h > r1) h = r1 - r;
    auto add = [&](std::initializer_list<std::pair<double, const State*>> terms) {
      State out = y;
      for (const auto& [c, k] : terms) {
        out[0] += h * c * (*k)[0];
        out[1] += h * c * (*k)[1];
      }
      return out;
    };
    const State k1 = f(r, y);
    const State k2 = f(r + c2 * h, add({{a21, &k1}}));
    const State k3 = f(r + c3 * h, add({{a31, &k1}, {a32, &k2}}));
    const State k4 = f(r + c4 * h, add({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = f(r + c5 * h, add({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        f(r + h, add({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y5 = add({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = f(r + h, y5);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = 1e-300 + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / scale);
    }
    if (!std::isfinite(err))
      throw Error(ErrorCode::SolverDivergence, "scattering::solve_scattering",
                  "non-finite solution");
    if (err <= 1.0) {
      r += h;
      y = y5;
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
  }
  return y;
}

std::vector<double> build_mesh(const RadialPotential& v, double R, int n_in, int n_out) {
  const double R0 = v.support_radius();
  std::vector<double> breaks{0.0};
  for (double x : v.breakpoints())
    if (x > 0.0 && x < R0) breaks.push_back(x);
  breaks.push_back(R0);
  std::vector<double> mesh{0.0};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i], hi = breaks[i + 1];
    const int n = std::max(1, int(std::ceil(n_in * (hi - lo) / R0)));
    for (int k = 1; k < n; ++k) mesh.push_back(lo + (hi - lo) * k / n);
    mesh.push_back(hi);
  }
  const double ratio = std::log(R / R0);
  for (int k = 1; k < n_out; ++k) mesh.push_back(R0 * std::exp(ratio * k / n_out));
  mesh.push_back(R);
  return mesh;
}

double extract_a(double r, double phi, double dphi) {
  // phi / (r phi') = log(r / a)
  return r * std::exp(-phi / (r * dphi));
}

}  // namespace

ScatteringSolution solve_scattering(const RadialPotential& v, double R, double tol,
                                    const ScatteringOptions& options) {
  constexpr const char* where = "scattering::solve_scattering";
  const double R0 = v.support_radius();
  if (!(R > R0)) throw Error(ErrorCode::InvalidArgument, where, "R must exceed the support radius");
  if (!(tol > 0.0 && tol <= 1e-3))
    throw Error(ErrorCode::InvalidArgument, where, "tol must lie in (0, 1e-3]");

  ScatteringSolution sol;
  sol.R = R;
  sol.support_radius = R0;
  sol.r = build_mesh(v, R, options.interior_cells, options.exterior_cells);
  const std::size_t n = sol.r.size();
  sol.phi.assign(n, 1.0);
  sol.dphi.assign(n, 0.0);

  if (v.is_zero()) {
    sol.scattering_length = 0.0;
    sol.scattering_length_2R = 0.0;
    sol.functional_value = 0.0;
    return sol;
  }

  const double rtol = std::min(tol, 1e-10) * 1e-3;
  const double v00 = v.value_at_origin();
  const double r_start = 1e-6 * R0;
  // phi = 1 + v(0) r^2 / 8 + O(r^4) regularises the origin.
  State y{1.0 + v00 * r_start * r_start / 8.0, v00 * r_start / 4.0};
  double r_prev = r_start;
  for (std::size_t i = 1; i < n; ++i) {
    const double lo = sol.r[i - 1], hi = sol.r[i];
    y = dopri_cell(Rhs{v, lo, hi}, r_prev, hi, y, rtol);
    r_prev = hi;
    sol.phi[i] = y[0];
    sol.dphi[i] = y[1];
    // The equation is linear, so strong potentials are handled by rescaling
    // the profile computed so far before it overflows.
    if (std::abs(y[0]) > 1e150) {
      constexpr double shrink = 1e-150;
      for (std::size_t j = 0; j <= i; ++j) {
        sol.phi[j] *= shrink;
        sol.dphi[j] *= shrink;
      }
      y[0] *= shrink;
      y[1] *= shrink;
    }
  }
  sol.dphi[0] = 0.0;

  // Continue to 2R for the independence post-check.
  State y2 = y;
  const int n_check = std::max(8, options.exterior_cells / 4);
  double r_cur = R;
  for (int k = 1; k <= n_check; ++k) {
    const double r_next = R * std::exp(std::log(2.0) * k / n_check);
    y2 = dopri_cell(Rhs{v, r_cur, r_next}, r_cur, r_next, y2, rtol);
    r_cur = r_next;
  }

  const double a = extract_a(R, y[0], y[1]);
  const double a2 = extract_a(2.0 * R, y2[0], y2[1]);
  if (!std::isfinite(a)) throw Error(ErrorCode::SolverDivergence, where, "non-finite a");
  if (a >= R)
    throw Error(ErrorCode::NonPositiveLogArgument, where,
                "extracted a >= R; the matching radius is too small");
  if (std::abs(a2 - a) > 10.0 * tol * a + 1e-14 * R)
    throw Error(ErrorCode::SolverDivergence, where,
                "scattering length changed when recomputed at 2R");

  const double scale = 1.0 / y[0];
  for (std::size_t i = 0; i < n; ++i) {
    sol.phi[i] *= scale;
    sol.dphi[i] *= scale;
  }
  sol.phi.back() = 1.0;
  sol.scattering_length = a;
  sol.scattering_length_2R = a2;
  sol.functional_value = variational_value(v, sol.r, sol.phi, sol.dphi, R);
  return sol;
}

double ScatteringSolution::phi_at(double radius) const {
  if (radius >= R) {
    if (scattering_length <= 0.0) return 1.0;
    return std::log(radius / scattering_length) / std::log(R / scattering_length);
  }
  if (radius <= r.front()) return phi.front();
  const auto it = std::upper_bound(r.begin(), r.end(), radius);
  const std::size_t i = std::size_t(it - r.begin());
  const double h = r[i] - r[i - 1];
  const double t = (radius - r[i - 1]) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  return h00 * phi[i - 1] + h10 * h * dphi[i - 1] + h01 * phi[i] + h11 * h * dphi[i];
}

double variational_value(const RadialPotential& v, std::span<const double> r,
                         std::span<const double> phi, std::span<const double> dphi, double R) {
  constexpr const char* where = "scattering::variational_value";
  if (r.size() < 2 || phi.size() != r.size() || dphi.size() != r.size())
    throw Error(ErrorCode::MeshMismatch, where, "profile arrays must share one mesh");
  if (std::abs(r.back() - R) > 1e-12 * R)
    throw Error(ErrorCode::MeshMismatch, where, "mesh does not end at R");
  for (double bp : v.breakpoints()) {
    if (bp <= r.front() || bp >= r.back()) continue;
    const auto it = std::lower_bound(r.begin(), r.end(), bp * (1 - 1e-12));
    if (it == r.end() || std::abs(*it - bp) > 1e-12 * bp)
      throw Error(ErrorCode::MeshMismatch, where, "potential breakpoint is not a mesh node");
  }

  // 5-point Gauss-Legendre on [0, 1].
  constexpr std::array<double, 5> x = {0.046910077030668, 0.230765344947158, 0.5,
                                       0.769234655052842, 0.953089922969332};
  constexpr std::array<double, 5> w = {0.118463442528095, 0.239314335249683, 0.284444444444444,
                                       0.239314335249683, 0.118463442528095};
  double total = 0.0, comp = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double lo = r[i], hi = r[i + 1], h = hi - lo;
    double cell = 0.0;
    for (int q = 0; q < 5; ++q) {
      const double t = x[q];
      const double rr = lo + h * t;
      const double f = (1 + 2 * t) * (1 - t) * (1 - t) * phi[i] + t * (1 - t) * (1 - t) * h * dphi[i] +
                       t * t * (3 - 2 * t) * phi[i + 1] + t * t * (t - 1) * h * dphi[i + 1];
      const double df = 6 * t * (t - 1) / h * phi[i] + (1 - t) * (1 - 3 * t) * dphi[i] +
                        6 * t * (1 - t) / h * phi[i + 1] + t * (3 * t - 2) * dphi[i + 1];
      cell += w[q] * (df * df + 0.5 * v.inside(rr, lo, hi) * f * f) * rr;
    }
    // Neumaier summation
    const double term = cell * h;
    const double t2 = total + term;
    comp += std::abs(total) >= std::abs(term) ? (total - t2) + term : (term - t2) + total;
    total = t2;
  }
  return 2.0 * std::numbers::pi * (total + comp);
}

double r_independence_report(const RadialPotential& v, std::span<const double> R_list,
                             double tol) {
  if (R_list.empty()) return 0.0;
  std::vector<double> a;
  for (double R : R_list) a.push_back(solve_scattering(v, R, tol).scattering_length);
  if (a.front() == 0.0) return 0.0;
  const auto [mn, mx] = std::minmax_element(a.begin(), a.end());
  return (*mx - *mn) / a.front();
}

}  // namespace bose2d
