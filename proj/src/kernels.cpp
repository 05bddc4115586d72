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

#include "bose2d/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

#include "bose2d/special.hpp"

namespace bose2d::kernels {

namespace {

inline bool coefficients_at(double p2, double g, double rho0, double& c, double& s, double& D) {
  const double rg = rho0 * g;
  const double disc = p2 * (p2 + 2.0 * rg);
  if (!(disc > 0.0)) return false;
  D = std::sqrt(disc);
  const double x = p2 + rg;
  const double s2 = rg * rg / (2.0 * D * (x + D));
  c = std::sqrt(1.0 + s2);
  s = rg > 0.0 ? -std::sqrt(s2) : std::sqrt(s2);
  return true;
}

inline double residual_s2(double p2, double g, double rho0, double& cs2_sum) {
  const double rg = rho0 * g;
  const double D = std::sqrt(p2 * (p2 + 2.0 * rg));
  const double x = p2 + rg;
  cs2_sum = x / D;  // s^2 + c^2
  return rg * rg / (2.0 * D * (x + D));
}

std::size_t chunks(std::size_t n) { return (n + kChunk - 1) / kChunk; }

}  // namespace

int max_threads() { return omp_get_max_threads(); }

// ------------------------------------------------------------------ serial

namespace serial {

std::ptrdiff_t bogoliubov_coefficients(std::span<const double> p2, std::span<const double> ghat,
                                       double rho0, CoefficientArrays out) {
  for (std::size_t i = 0; i < p2.size(); ++i)
    if (!coefficients_at(p2[i], ghat[i], rho0, out.c[i], out.s[i], out.D[i]))
      return std::ptrdiff_t(i);
  return -1;
}

LemmaTriple lemma_sums(std::span<const std::uint32_t> mult, std::span<const double> c,
                       std::span<const double> s, std::span<const double> n) {
  Accumulator s2, sc, q2;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const double m = mult[i];
    s2.add(m * s[i] * s[i]);
    sc.add(m * std::abs(s[i] * c[i]));
    q2.add(m * (s[i] * s[i] + c[i] * c[i]) * n[i]);
  }
  return {s2.value(), sc.value(), q2.value()};
}

ResidualPair residual_sums(std::span<const std::uint32_t> mult, std::span<const double> p2,
                           std::span<const double> ghat, std::span<const double> n, double rho0) {
  Accumulator s2, q2;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    double cs2 = 0.0;
    const double v = residual_s2(p2[i], ghat[i], rho0, cs2);
    s2.add(mult[i] * v);
    q2.add(mult[i] * cs2 * n[i]);
  }
  return {s2.value(), q2.value()};
}

double thermal_log_sum(std::span<const std::uint32_t> mult, std::span<const double> D0,
                       double beta) {
  Accumulator acc;
  for (std::size_t i = 0; i < mult.size(); ++i)
    acc.add(mult[i] * special::log1mexp(beta * D0[i]));
  return acc.value();
}

}  // namespace serial

// ------------------------------------------------------------------ OpenMP

namespace omp {

std::ptrdiff_t bogoliubov_coefficients(std::span<const double> p2, std::span<const double> ghat,
                                       double rho0, CoefficientArrays out) {
  const std::ptrdiff_t n = std::ptrdiff_t(p2.size());
  std::ptrdiff_t first_bad = n;
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (!coefficients_at(p2[i], ghat[i], rho0, out.c[i], out.s[i], out.D[i]))
      first_bad = std::min(first_bad, i);
  return first_bad == n ? -1 : first_bad;
}

LemmaTriple lemma_sums(std::span<const std::uint32_t> mult, std::span<const double> c,
                       std::span<const double> s, std::span<const double> n) {
  const std::size_t nc = chunks(mult.size());
  std::vector<LemmaTriple> part(nc);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < std::ptrdiff_t(nc); ++k) {
    Accumulator s2, sc, q2;
    const std::size_t end = std::min(mult.size(), std::size_t(k + 1) * kChunk);
    for (std::size_t i = std::size_t(k) * kChunk; i < end; ++i) {
      const double m = mult[i];
      s2.add(m * s[i] * s[i]);
      sc.add(m * std::abs(s[i] * c[i]));
      q2.add(m * (s[i] * s[i] + c[i] * c[i]) * n[i]);
    }
    part[std::size_t(k)] = {s2.value(), sc.value(), q2.value()};
  }
  Accumulator s2, sc, q2;
  for (const auto& p : part) {
    s2.add(p.s2);
    sc.add(p.sc);
    q2.add(p.q2);
  }
  return {s2.value(), sc.value(), q2.value()};
}

ResidualPair residual_sums(std::span<const std::uint32_t> mult, std::span<const double> p2,
                           std::span<const double> ghat, std::span<const double> n, double rho0) {
  const std::size_t nc = chunks(mult.size());
  std::vector<ResidualPair> part(nc);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < std::ptrdiff_t(nc); ++k) {
    Accumulator s2, q2;
    const std::size_t end = std::min(mult.size(), std::size_t(k + 1) * kChunk);
    for (std::size_t i = std::size_t(k) * kChunk; i < end; ++i) {
      double cs2 = 0.0;
      const double v = residual_s2(p2[i], ghat[i], rho0, cs2);
      s2.add(mult[i] * v);
      q2.add(mult[i] * cs2 * n[i]);
    }
    part[std::size_t(k)] = {s2.value(), q2.value()};
  }
  Accumulator s2, q2;
  for (const auto& p : part) {
    s2.add(p.s2);
    q2.add(p.q2);
  }
  return {s2.value(), q2.value()};
}

double thermal_log_sum(std::span<const std::uint32_t> mult, std::span<const double> D0,
                       double beta) {
  const std::size_t nc = chunks(mult.size());
  std::vector<double> part(nc);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < std::ptrdiff_t(nc); ++k) {
    Accumulator acc;
    const std::size_t end = std::min(mult.size(), std::size_t(k + 1) * kChunk);
    for (std::size_t i = std::size_t(k) * kChunk; i < end; ++i)
      acc.add(mult[i] * special::log1mexp(beta * D0[i]));
    part[std::size_t(k)] = acc.value();
  }
  Accumulator acc;
  for (double p : part) acc.add(p);
  return acc.value();
}

double pair_convolution(std::span<const int> m, std::span<const int> n, std::span<const double> w,
                        std::span<const double> gtable, int M) {
  const std::ptrdiff_t count = std::ptrdiff_t(w.size());
  const int width = 4 * M + 1;
  std::vector<double> rows(std::size_t(count), 0.0);
  // g is even, so the (i, j) and (j, i) terms agree; only j > i is visited.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Accumulator acc;
    for (std::ptrdiff_t j = i + 1; j < count; ++j) {
      const int dm = m[j] - m[i] + 2 * M, dn = n[j] - n[i] + 2 * M;
      acc.add(gtable[std::size_t(dm * width + dn)] * w[j]);
    }
    rows[std::size_t(i)] = 2.0 * w[i] * acc.value();
  }
  Accumulator total;
  for (double r : rows) total.add(r);
  return total.value();
}

}  // namespace omp

}  // namespace bose2d::kernels
