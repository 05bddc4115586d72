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

// Data-parallel kernels over momentum shells. Every kernel exists twice: a
// plain serial reference and an OpenMP version. The OpenMP reductions split
// the input into fixed-size chunks, sum each chunk with compensation and
// combine the partials in chunk order, so results do not depend on the
// thread count.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>

namespace bose2d::kernels {

/// Neumaier compensated sum.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

inline constexpr std::size_t kChunk = 8192;

struct LemmaTriple {
  double s2 = 0.0;  // sum s^2
  double sc = 0.0;  // sum |s c|
  double q2 = 0.0;  // sum (s^2 + c^2) n
};

struct ResidualPair {
  double s2 = 0.0;
  double q2 = 0.0;
};

/// Per-shell Bogoliubov data: s^2 = (rho0 g)^2 / (2 D (x + D)), c = sqrt(1 + s^2),
/// sign(s) = -sign(g), with x = p^2 + rho0 g and D = sqrt(p^4 + 2 p^2 rho0 g).
/// Returns the index of the first shell with p^4 + 2 p^2 rho0 g <= 0, or -1.
struct CoefficientArrays {
  std::span<double> c, s, D;
};

namespace serial {
std::ptrdiff_t bogoliubov_coefficients(std::span<const double> p2, std::span<const double> ghat,
                                       double rho0, CoefficientArrays out);
LemmaTriple lemma_sums(std::span<const std::uint32_t> mult, std::span<const double> c,
                       std::span<const double> s, std::span<const double> n);
ResidualPair residual_sums(std::span<const std::uint32_t> mult, std::span<const double> p2,
                           std::span<const double> ghat, std::span<const double> n, double rho0);
double thermal_log_sum(std::span<const std::uint32_t> mult, std::span<const double> D0,
                       double beta);
}  // namespace serial

namespace omp {
std::ptrdiff_t bogoliubov_coefficients(std::span<const double> p2, std::span<const double> ghat,
                                       double rho0, CoefficientArrays out);
LemmaTriple lemma_sums(std::span<const std::uint32_t> mult, std::span<const double> c,
                       std::span<const double> s, std::span<const double> n);
ResidualPair residual_sums(std::span<const std::uint32_t> mult, std::span<const double> p2,
                           std::span<const double> ghat, std::span<const double> n, double rho0);
double thermal_log_sum(std::span<const std::uint32_t> mult, std::span<const double> D0,
                       double beta);
/// sum_{i != j} g(q_j - p_i) w_i w_j over explicit points (m, n); g is read
/// from a difference table indexed by (dm + 2M) * (4M + 1) + (dn + 2M).
double pair_convolution(std::span<const int> m, std::span<const int> n, std::span<const double> w,
                        std::span<const double> gtable, int M);
}  // namespace omp

int max_threads();

}  // namespace bose2d::kernels
