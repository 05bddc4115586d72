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

#include "bose2d/special.hpp"

#include <cmath>
#include <numbers>

#include "bose2d/error.hpp"

namespace bose2d::special {

namespace {

constexpr double kPi = std::numbers::pi;

// Ascending series; the largest term stays below ~10 for x < 5.
std::pair<double, double> series_j01(double x) {
  const double q = 0.25 * x * x;
  double t0 = 1.0, s0 = 1.0;
  double t1 = 0.5 * x, s1 = t1;
  for (int k = 1; k < 60; ++k) {
    t0 *= -q / (double(k) * k);
    t1 *= -q / (double(k) * (k + 1));
    s0 += t0;
    s1 += t1;
    if (std::abs(t0) < 1e-18 && std::abs(t1) < 1e-18) break;
  }
  return {s0, s1};
}

// Miller backward recurrence normalised by J0 + 2 sum J_2k = 1.
std::pair<double, double> miller_j01(double x) {
  int n = static_cast<int>(x + 40.0 + 4.0 * std::sqrt(x));
  n += n & 1;
  double jp1 = 0.0, j = 1e-300, norm = 0.0;
  double j0 = 0.0, j1 = 0.0;
  for (int k = n; k >= 1; --k) {
    const double jm1 = (2.0 * k / x) * j - jp1;
    jp1 = j;
    j = jm1;
    // j now holds J_{k-1}
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
    if (k - 1 == 1) j1 = j;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
  }
  j0 = j;
  norm += j0;
  return {j0 / norm, j1 / norm};
}

// Hankel expansion; terms shrink to ~exp(-2x), negligible for x >= 25.
std::pair<double, double> asymptotic_j01(double x) {
  auto pq = [x](double nu) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0, term = 1.0;
    double last = 1e300;
    for (int k = 1; k < 80; ++k) {
      const double odd = 2.0 * k - 1.0;
      term *= (mu - odd * odd) / (k * 8.0 * x);
      if (std::abs(term) > last) break;
      last = std::abs(term);
      // k odd feeds Q with sign (-1)^((k-1)/2), k even feeds P with (-1)^(k/2)
      switch (k % 4) {
        case 1: q += term; break;
        case 2: p -= term; break;
        case 3: q -= term; break;
        case 0: p += term; break;
      }
      if (last < 1e-18) break;
    }
    return std::pair{p, q};
  };
  const double c = std::cos(x), s = std::sin(x);
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double r = std::numbers::sqrt2 / 2.0;
  const auto [p0, q0] = pq(0.0);
  const auto [p1, q1] = pq(1.0);
  // cos/sin of x - pi/4 and x - 3pi/4 expanded to avoid reducing a rounded pi.
  const double c0 = r * (c + s), s0 = r * (s - c);
  const double c1 = r * (s - c), s1 = -r * (s + c);
  return {amp * (p0 * c0 - q0 * s0), amp * (p1 * c1 - q1 * s1)};
}

}  // namespace

std::pair<double, double> bessel_j01(double x) {
  const double ax = std::abs(x);
  std::pair<double, double> r;
  if (ax == 0.0)
    r = {1.0, 0.0};
  else if (ax < 5.0)
    r = series_j01(ax);
  else if (ax < 25.0)
    r = miller_j01(ax);
  else
    r = asymptotic_j01(ax);
  if (x < 0.0) r.second = -r.second;
  return r;
}

double bessel_j0(double x) { return bessel_j01(x).first; }
double bessel_j1(double x) { return bessel_j01(x).second; }

double bessel_j0_zero(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "special::bessel_j0_zero", "k must be >= 1");
  const double beta = (k - 0.25) * kPi;
  const double e = 1.0 / (8.0 * beta);
  double z = beta + e - 124.0 / 3.0 * e * e * e;
  for (int it = 0; it < 8; ++it) {
    const auto [j0, j1] = bessel_j01(z);
    const double step = j0 / j1;  // J0' = -J1
    z += step;
    if (std::abs(step) < 1e-16 * z) break;
  }
  return z;
}

double dilog(double z) {
  if (!(z >= 0.0 && z <= 1.0))
    throw Error(ErrorCode::DomainError, "freeenergy::dilog", "argument must lie in [0, 1]");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return kPi * kPi / 6.0;
  if (z > 0.5) return kPi * kPi / 6.0 - std::log(z) * std::log1p(-z) - dilog(1.0 - z);
  double sum = 0.0, zk = 1.0;
  for (int k = 1; k < 200; ++k) {
    zk *= z;
    const double term = zk / (double(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double log1mexp(double x) {
  return x > std::numbers::ln2 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

}  // namespace bose2d::special
