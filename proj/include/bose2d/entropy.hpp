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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bose2d/lattice.hpp"

namespace bose2d {

/// h(x) = -x log x on [0, 1], with h(0) = 0.
double entropy_h(double x);

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates to 1e-12 and symmetrises the input.
  explicit DensityMatrix(const Eigen::MatrixXcd& m);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix diagonal(std::span<const double> weights);

  int dim() const { return int(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  /// Eigenvalues in descending order.
  const Eigen::VectorXd& spectrum() const { return spectrum_; }

 private:
  Eigen::MatrixXcd m_;
  Eigen::VectorXd spectrum_;
};

double vn_entropy(const DensityMatrix& g);
/// Sum of |eigenvalues| of the difference (no factor 1/2).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = true;
  bool holds = false;
};

/// sum_i |lambda_i(a) - lambda_i(b)| over descending spectra against
/// ||a - b||_1.
InequalityCheck eigenvalue_difference_check(const DensityMatrix& a, const DensityMatrix& b);
/// |sum_{i in I} h(lambda_i(b)) - h(lambda_i(a))| against
/// log|I| D + h(D), D = ||a - b||_1, with I the `index_size` largest
/// eigenvalues. Not applicable when D > 1/e.
InequalityCheck fannes_check(const DensityMatrix& a, const DensityMatrix& b, int index_size);

/// Counter-based seed for case `i` under a root seed.
std::uint64_t case_seed(std::uint64_t root, std::uint64_t i);

/// A A^dagger / tr with A standard complex Gaussian.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);
/// Haar unitary from the QR factor of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng);
/// Two density matrices at trace distance `distance`: a random one and its
/// mixture with an independent random state.
std::pair<DensityMatrix, DensityMatrix> random_near_pair(int dim, double distance,
                                                         std::mt19937_64& rng);

struct CaseResult {
  std::uint64_t case_id = 0;
  std::uint64_t seed = 0;
  int dim = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = true;
  bool holds = false;
};

/// Random pairs with dims in [2, max_dim]; the Fannes suite draws near pairs
/// with trace distance below 1/e.
std::vector<CaseResult> eigenvalue_difference_suite(std::uint64_t root_seed, int cases = 200,
                                                    int max_dim = 64);
std::vector<CaseResult> fannes_suite(std::uint64_t root_seed, int cases = 200, int max_dim = 64);
/// [{case_id, seed, lhs, rhs, holds}, ...]
std::string suite_json(const std::vector<CaseResult>& cases);

/// sum_{n >= M} e^{-x n} = e^{-x M} / (1 - e^{-x}).
double geometric_tail(double x, int M);
/// sum_{n >= M} n e^{-x n} = e^{-x M} (M + e^{-x} / (1 - e^{-x})) / (1 - e^{-x}).
double geometric_weighted_tail(double x, int M);

struct TruncationParams {
  double K = 0.0;     // momenta |q| <= sqrt(K) may be occupied
  int M = 1;          // occupations below M
  double beta = 1.0;
};

struct TruncationTails {
  double tail_M = 0.0;         // sum_{|q| <= sqrt K} e^{-beta D0 M}
  double tail_K = 0.0;         // sum_{|q| > sqrt K} e^{-beta D0}
  double log_partition = 0.0;  // -sum log(1 - e^{-beta D0})
  double weighted = 0.0;       // energy-weighted bound on the excluded states
  /// weighted + log_partition (tail_M + tail_K), an upper bound on
  /// sum_{i not in I} h(lambda_i).
  double excluded_entropy_bound = 0.0;
};

/// Uses the field's D0 and shell multiplicities. Throws CutoffTooSmall when
/// the lattice does not reach sqrt(K) or its outermost shell still matters.
TruncationTails truncation_tails(const BogoliubovField& field, const TruncationParams& tp);

/// Exact sum_{i not in I} h(lambda_i) for a handful of modes by enumerating
/// occupations up to n_max. `in_K` marks modes with |q| <= sqrt(K).
double excluded_entropy_enumeration(std::span<const double> D0, std::span<const bool> in_K,
                                    double beta, int M, int n_max);
/// The same bound as truncation_tails for an explicit list of modes.
TruncationTails truncation_tails(std::span<const double> D0, std::span<const bool> in_K,
                                 double beta, int M);

}  // namespace bose2d
