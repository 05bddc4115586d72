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

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "bose2d/config.hpp"
#include "bose2d/error.hpp"
#include "bose2d/kernels.hpp"
#include "bose2d/lattice.hpp"
#include "bose2d/softpot.hpp"

using namespace bose2d;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;

ErrorCode code_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("lattice shells and multiplicities") {
  const MomentumLattice lat(2.0 * pi, 5.0);
  // Count integer points with 0 < m^2 + n^2 <= 25 directly.
  std::map<std::uint64_t, std::uint32_t> brute;
  for (int m = -5; m <= 5; ++m)
    for (int n = -5; n <= 5; ++n) {
      const int k = m * m + n * n;
      if (k > 0 && k <= 25) ++brute[std::uint64_t(k)];
    }
  REQUIRE(lat.shell_count() == brute.size());
  std::size_t total = 0, i = 0;
  for (const auto& [k, mult] : brute) {
    CHECK(lat.shell_index()[i] == k);
    CHECK(lat.multiplicity()[i] == mult);
    CHECK(lat.p2()[i] == Approx(double(k)));
    total += mult;
    ++i;
  }
  CHECK(lat.point_count() == total);
  CHECK(lat.points().size() == total);
  CHECK(lat.max_coordinate() == 5);
  CHECK(lat.spacing() == Approx(1.0));
}

TEST_CASE("lattice guards") {
  CHECK(code_of([] { MomentumLattice(10.0, 0.1); }) == ErrorCode::CutoffTooSmall);
  CHECK(code_of([] { MomentumLattice(-1.0, 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Bogoliubov coefficients") {
  const MomentumLattice lat(2.0 * pi, 3.0);
  SUBCASE("free") {
    const auto f = build_field(lat, {1.0, 1.0, 0.0, Interaction::free()});
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      CHECK(f.c[i] == 1.0);
      CHECK(f.s[i] == 0.0);
      CHECK(f.D[i] == Approx(lat.p2()[i]));
    }
  }
  SUBCASE("p^2 = rho0 g = 1") {
    const auto f = build_field(lat, {1.0, 1.0, 0.0, Interaction::constant(1.0)});
    CHECK(f.D[0] == Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(f.c[0] * f.c[0] == Approx((2.0 / std::sqrt(3.0) + 1.0) / 2.0).epsilon(1e-14));
    CHECK(f.s[0] * f.s[0] == Approx((2.0 / std::sqrt(3.0) - 1.0) / 2.0).epsilon(1e-14));
    CHECK(f.s[0] < 0.0);
  }
  SUBCASE("tanh 2 phi relation") {
    const auto f = build_field(lat, {0.7, 1.0, 0.0, Interaction{1.3, 0.4}});
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      const double rg = 0.7 * f.ghat[i];
      const double t = 2.0 * f.c[i] * f.s[i] / (f.c[i] * f.c[i] + f.s[i] * f.s[i]);
      CHECK(t == Approx(-rg / (lat.p2()[i] + rg)).epsilon(1e-13));
    }
    CHECK(diagonalization_residuals(f).worst() < 1e-12);
  }
}

TEST_CASE("negative dispersion is reported") {
  const MomentumLattice lat(2.0 * pi, 3.0);
  CHECK(code_of([&] { build_field(lat, {1.0, 1.0, 0.0, Interaction::constant(-2.0)}); }) ==
        ErrorCode::NonPositiveDispersion);
}

TEST_CASE("identities on a physical lattice") {
  const auto p = parameters_at(1.0, 1e-8, 0.1);
  const Interaction g = SoftPotential::from_parameters(p).interaction();
  const MomentumLattice lat(p.L, default_cutoff(p.rho, g, p.T));
  const auto f = build_field(lat, {p.rho, p.rho, p.T, g});
  const auto id = diagonalization_residuals(f);
  CHECK(id.hyperbolic < 1e-10);
  CHECK(id.product < 1e-10);
  CHECK(id.quadratic < 1e-10);
  CHECK(id.half_gap < 1e-10);
}

TEST_CASE("lemma sums") {
  const MomentumLattice small(2.0 * pi, std::sqrt(8.0));
  REQUIRE(small.point_count() == 24);
  SumOptions raw;
  raw.continuum_tail = false;
  raw.thermal_tail_tol = 1.0;

  SUBCASE("free gas") {
    const auto f = build_field(small, {1.0, 1.0, 1.0, Interaction::free()});
    const auto s = lemma_sums(f, raw);
    CHECK(s.S2 == 0.0);
    CHECK(s.SC == 0.0);
    double occ = 0.0;
    for (const auto& [m, n] : small.points()) occ += 1.0 / std::expm1(double(m * m + n * n));
    CHECK(s.Q2 == Approx(occ).epsilon(1e-14));
  }
  SUBCASE("vacuum") {
    const auto f = build_field(small, {1.0, 1.0, 0.0, Interaction::constant(1.0)});
    CHECK(lemma_sums(f, raw).Q2 == 0.0);
  }
  SUBCASE("brute force over points") {
    const FieldSpec spec{1.0, 1.0, 1.0, Interaction::constant(1.0)};
    const auto f = build_field(small, spec);
    const auto s = lemma_sums(f, raw);
    double s2 = 0.0, sc = 0.0;
    for (const auto& [m, n] : small.points()) {
      const double p2 = m * m + n * n;
      const double phi = 0.5 * std::atanh(-1.0 / (p2 + 1.0));
      s2 += std::sinh(phi) * std::sinh(phi);
      sc += std::abs(std::sinh(phi) * std::cosh(phi));
    }
    CHECK(s.S2 == Approx(s2).epsilon(1e-13));
    CHECK(s.SC == Approx(sc).epsilon(1e-13));
    const auto ref = lemma_sums_reference(small, spec);
    CHECK(s.Q2 == Approx(ref.Q2).epsilon(1e-13));
  }
  SUBCASE("serial and OpenMP agree") {
    const auto p = parameters_at(1.0, 1e-6, 0.1);
    const Interaction g = SoftPotential::from_parameters(p).interaction();
    const MomentumLattice lat(p.L, default_cutoff(p.rho, g, p.T));
    const auto fs = build_field(lat, {p.rho, p.rho, p.T, g}, Backend::Serial);
    const auto fo = build_field(lat, {p.rho, p.rho, p.T, g}, Backend::OpenMP);
    SumOptions so, oo;
    so.backend = Backend::Serial;
    const auto a = lemma_sums(fs, so), b = lemma_sums(fo, oo);
    CHECK(a.S2 == Approx(b.S2).epsilon(1e-13));
    CHECK(a.SC == Approx(b.SC).epsilon(1e-13));
    CHECK(a.Q2 == Approx(b.Q2).epsilon(1e-13));
  }
}

TEST_CASE("continuum tails") {
  const double L = 50.0, P = 20.0;
  const Interaction g = Interaction::constant(0.5);
  // Far-field s^2 ~ (rho0 g)^2 / (4 p^4) integrated from P.
  const double A = 0.5;
  CHECK(s2_continuum_tail(L, P, 1.0, g) ==
        Approx(L * L / (2.0 * pi) * A * A / (8.0 * P * P)).epsilon(1e-2));
  CHECK(std::isinf(sc_continuum_tail(L, P, 1.0, g)));
  CHECK(std::isfinite(sc_continuum_tail(L, P, 1.0, Interaction{0.5, 0.1})));
  CHECK(s2_continuum_tail(L, P, 1.0, Interaction::free()) == 0.0);
}

TEST_CASE("condensate fixed point") {
  SUBCASE("ideal gas at zero temperature") {
    const auto p = parameters_at(1.0, 1e-8, 0.0);
    CHECK(solve_condensate(p, Interaction::free()).N0 == p.particle_number());
  }
  SUBCASE("ideal gas at positive temperature") {
    const auto p = parameters_at(1.0, 1e-8, 0.1);
    const auto r = solve_condensate(p, Interaction::free());
    const MomentumLattice lat(p.L, default_cutoff(p.rho, Interaction::free(), p.T));
    kernels::Accumulator occ;
    for (std::size_t i = 0; i < lat.shell_count(); ++i)
      occ.add(lat.multiplicity()[i] / std::expm1(lat.p2()[i] / p.T));
    CHECK(r.N0 == Approx(r.N - occ.value()).epsilon(1e-14));
  }
  SUBCASE("interacting gas, rebuilt residual") {
    const auto p = parameters_at(1.0, 1e-10, 0.1);
    const Interaction g = SoftPotential::from_parameters(p).interaction();
    const auto r = solve_condensate(p, g);
    CHECK(r.N0 < r.N);
    CHECK(r.N0 > 0.5 * r.N);
    CHECK(std::abs(condensate_residual(p, g, r.N0)) < 1e-10 * r.N);
  }
  SUBCASE("infeasible at half the critical temperature") {
    const auto p = parameters_at(1.0, 1e-6, 0.5);
    const Interaction g = SoftPotential::from_parameters(p).interaction();
    CHECK(code_of([&] { solve_condensate(p, g); }) == ErrorCode::NoCondensateSolution);
    CHECK(condensate_residual(p, g, 0.5 * p.particle_number()) > 0.0);
  }
}

TEST_CASE("interaction convolution") {
  const MomentumLattice small(2.0 * pi, std::sqrt(8.0));
  for (const Interaction g : {Interaction::constant(1.0), Interaction{1.0, 0.3}}) {
    const auto f = build_field(small, {1.0, 1.0, 1.0, g});
    const double v = interaction_convolution(f);
    CHECK(v == Approx(interaction_convolution_reference(f)).epsilon(1e-12));
    CHECK(v == Approx(interaction_convolution(f, true)).epsilon(1e-12));
  }
  const auto free = build_field(small, {1.0, 1.0, 1.0, Interaction::free()});
  CHECK(interaction_convolution(free) == 0.0);
}

TEST_CASE("sum against integral") {
  const auto t = default_sum_vs_integral();
  REQUIRE(t.rows.size() == 4);
  CHECK(t.slope >= -1.6);
  CHECK(t.slope <= -0.9);
  CHECK(std::abs(t.rows.back().error) < std::abs(t.rows.front().error));
}

TEST_CASE("kernel backends agree on random data") {
  std::vector<double> p2, g, c, s, D, n;
  std::vector<std::uint32_t> mult;
  for (int i = 1; i <= 30000; ++i) {
    p2.push_back(0.01 * i);
    g.push_back(0.5 * std::cos(0.001 * i));
    mult.push_back(std::uint32_t(4 + i % 5));
    n.push_back(1.0 / std::expm1(0.01 * i + 0.1));
  }
  const auto N = p2.size();
  std::vector<double> c2(N), s2(N), D2(N);
  c.resize(N);
  s.resize(N);
  D.resize(N);
  CHECK(kernels::serial::bogoliubov_coefficients(p2, g, 1.0, {c, s, D}) == -1);
  CHECK(kernels::omp::bogoliubov_coefficients(p2, g, 1.0, {c2, s2, D2}) == -1);
  CHECK(c == c2);
  CHECK(s == s2);
  const auto a = kernels::serial::lemma_sums(mult, c, s, n);
  const auto b = kernels::omp::lemma_sums(mult, c, s, n);
  CHECK(a.s2 == Approx(b.s2).epsilon(1e-14));
  CHECK(a.q2 == Approx(b.q2).epsilon(1e-14));
  CHECK(kernels::serial::thermal_log_sum(mult, p2, 2.0) ==
        Approx(kernels::omp::thermal_log_sum(mult, p2, 2.0)).epsilon(1e-14));

  g[7] = -100.0;
  CHECK(kernels::serial::bogoliubov_coefficients(p2, g, 1.0, {c, s, D}) == 7);
  CHECK(kernels::omp::bogoliubov_coefficients(p2, g, 1.0, {c2, s2, D2}) == 7);
}
