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
#include <numbers>
#include <sstream>
#include <vector>

#include "bose2d/error.hpp"
#include "bose2d/scattering.hpp"

using namespace bose2d;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;

double bessel_oracle(double kR) {
  return std::exp(-std::cyl_bessel_i(0.0, kR) / (kR * std::cyl_bessel_i(1.0, kR)));
}
}  // namespace

TEST_CASE("soft disk scattering length") {
  const auto sol = solve_scattering(RadialPotential::soft_disk(2.0, 1.0), 10.0);
  CHECK(sol.scattering_length == Approx(bessel_oracle(1.0)).epsilon(1e-8));
  CHECK(sol.scattering_length == Approx(0.10643788282329).epsilon(1e-10));
  CHECK(sol.functional_value == Approx(2.0 * pi / std::log(10.0 / bessel_oracle(1.0))).epsilon(1e-7));
  CHECK(sol.scattering_length_2R == Approx(sol.scattering_length).epsilon(1e-8));
  CHECK(sol.phi.back() == Approx(1.0));
}

TEST_CASE("scaling with the disk radius") {
  const double R0 = 0.25;
  const auto sol = solve_scattering(RadialPotential::soft_disk(2.0 / (R0 * R0), R0), 10.0 * R0);
  CHECK(sol.scattering_length / R0 == Approx(bessel_oracle(1.0)).epsilon(1e-8));
}

TEST_CASE("hard disk limit") {
  const double k = 50.0;
  const auto sol = solve_scattering(RadialPotential::soft_disk(2.0 * k * k, 1.0), 10.0);
  CHECK(sol.scattering_length == Approx(bessel_oracle(k)).epsilon(1e-8));
  CHECK(std::abs(sol.scattering_length - 1.0) < 0.03);

  // Strong enough that the unscaled profile would overflow.
  const double k2 = std::sqrt(0.5e6);
  const auto strong = solve_scattering(RadialPotential::soft_disk(1e6, 1.0), 10.0);
  CHECK(strong.scattering_length == Approx(0.998585786319442).epsilon(1e-9));
  CHECK(k2 > 700.0);
}

TEST_CASE("profile is nondecreasing and matches the exterior log") {
  const auto sol = solve_scattering(RadialPotential::soft_disk(3.0, 1.0), 8.0);
  for (std::size_t i = 1; i < sol.phi.size(); ++i) CHECK(sol.phi[i] >= sol.phi[i - 1] - 1e-15);
  const double a = sol.scattering_length;
  for (double r : {1.5, 3.0, 6.0})
    CHECK(sol.phi_at(r) == Approx(std::log(r / a) / std::log(8.0 / a)).epsilon(1e-8));
}

TEST_CASE("zero potential") {
  const auto sol = solve_scattering(RadialPotential::zero(1.0), 5.0);
  CHECK(sol.scattering_length == 0.0);
  CHECK(sol.functional_value == 0.0);
  for (double f : sol.phi) CHECK(f == 1.0);
  const std::vector<double> Rs{2.0, 5.0};
  CHECK(r_independence_report(RadialPotential::zero(1.0), Rs) == 0.0);
}

TEST_CASE("variational value of the exterior profile") {
  const double a = 0.1064584, R0 = 1.0, R = 10.0;
  std::vector<double> r, phi, dphi;
  const double lr = std::log(R / a);
  for (int i = 0; i <= 4000; ++i) {
    const double x = R0 * std::pow(R / R0, i / 4000.0);
    r.push_back(x);
    phi.push_back(std::log(x / a) / lr);
    dphi.push_back(1.0 / (x * lr));
  }
  const double expect = 2.0 * pi * (std::log(R / a) - std::log(R0 / a)) / (lr * lr);
  const double got = variational_value(RadialPotential::zero(R0), r, phi, dphi, R);
  CHECK(got == Approx(expect).epsilon(1e-9));

  std::vector<double> one(r.size(), 1.0), zero(r.size(), 0.0);
  CHECK(variational_value(RadialPotential::zero(R0), r, one, zero, R) == 0.0);
}

TEST_CASE("R independence") {
  const std::vector<double> Rs{2.0, 5.0, 10.0};
  const auto disk = RadialPotential::soft_disk(2.0, 1.0);
  CHECK(r_independence_report(disk, Rs) < 1e-8);

  std::vector<double> r, v;
  for (int i = 0; i <= 400; ++i) {
    r.push_back(1.2 * i / 400.0);
    v.push_back(disk(r.back()));
  }
  CHECK(r_independence_report(RadialPotential::table(r, v), Rs) < 1e-6);
}

TEST_CASE("monotone in the potential height") {
  double prev = 0.0;
  for (double v0 : {0.25, 1.0, 4.0, 16.0}) {
    const double a = solve_scattering(RadialPotential::soft_disk(v0, 1.0), 10.0).scattering_length;
    CHECK(a > prev);
    CHECK(a < 1.0);
    prev = a;
  }
}

TEST_CASE("table parsing") {
  std::istringstream good("# r v\n0 2\n0.5 2\n1 0\n2 0\n");
  const auto t = read_potential_table(good);
  CHECK(t(0.25) == Approx(2.0));
  CHECK(t(3.0) == 0.0);
  CHECK(t.scaled(2.0)(0.5) == Approx(t(0.25) / 4.0));
  CHECK(t.with_radius_unit(2.0)(0.5) == Approx(t(0.25)));
  CHECK(t.with_radius_unit(2.0).support_radius() == Approx(2.0));

  std::istringstream bad("0 1\nx y\n");
  CHECK_THROWS_AS(read_potential_table(bad), Error);
  CHECK_THROWS_AS(load_potential_table("/nonexistent/table.txt"), Error);
  CHECK_THROWS_AS(RadialPotential::soft_disk(-1.0, 1.0), Error);
}
