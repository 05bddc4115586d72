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

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace bose2d {

/// exp(A) by scaling and squaring with a degree-13 Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

/// Up to three bosonic modes, each truncated at n_max quanta. Basis states
/// are indexed by sum_j n_j (n_max + 1)^j.
class FockSpace {
 public:
  FockSpace(int modes, int n_max);

  int modes() const { return modes_; }
  int n_max() const { return n_max_; }
  int dim() const { return dim_; }

  const Eigen::MatrixXd& a(int j) const { return a_[std::size_t(j)]; }
  Eigen::MatrixXd adag(int j) const { return a_[std::size_t(j)].transpose(); }
  Eigen::MatrixXd number(int j) const;
  Eigen::MatrixXd total_number() const;
  /// Occupation of mode j in basis state `index`.
  int occupation(int index, int j) const;
  /// Projector onto states with n_j = n_max.
  Eigen::MatrixXd top_layer(int j) const;
  /// Diagonal mask of states with every occupation <= `limit`.
  Eigen::VectorXd low_mask(int limit) const;
  /// Diagonal mask of states with total occupation <= `limit`.
  Eigen::VectorXd total_mask(int limit) const;
  Eigen::VectorXd vacuum() const;

  /// max |[a_j, a_k^dagger] - delta_jk (I - (n_max + 1) P_top,j)| and
  /// max |[a_j, a_k]| over all pairs.
  double commutator_defect() const;

 private:
  int modes_, n_max_, dim_;
  std::vector<Eigen::MatrixXd> a_;
};

struct FockCheck {
  std::string name;
  double value = 0.0;      // residual or deviation
  double tolerance = 0.0;
  bool pass = false;
};

struct WeylReport {
  double residual = 0.0;       // W^dag a W - (sqrt(eps) + a) on states n <= support
  double mean_occupation = 0.0;  // <W Omega, N W Omega>
  double unitarity_defect = 0.0;
  double group_law = 0.0;      // W_{e1} W_{e2} - W_{(sqrt e1 + sqrt e2)^2} on low states
};

/// Single mode; `support` is the largest occupation in the residual window.
/// Throws CutoffTooSmall when the displaced vacuum still has
/// more than 1e-10 probability on the top level.
WeylReport weyl_conjugation_check(int n_max, double epsilon, int support);

struct BogoliubovReport {
  double residual = 0.0;        // e^{-B} a_+ e^{B} - (c a_+ + s a_-^dag), occupations <= limit
  double c = 0.0, s = 0.0;      // cosh(phi), sinh(phi)
  double squeezed_occupation = 0.0;
  double unitarity_defect = 0.0;
};

/// Two modes, B = phi (a_+^dag a_-^dag - a_- a_+), |phi| <= 1/2. The residual
/// is measured on states with total occupation <= `limit` (n_max / 4 when
/// negative).
BogoliubovReport bogoliubov_conjugation_check(int n_max, double phi, int limit = -1);

struct GibbsReport {
  std::vector<double> occupation;  // Tr(a_j^dag a_j Gamma)
  std::vector<double> deviation;   // against (e^{beta D} - 1)^{-1}
  double entropy = 0.0;            // from the dense spectrum
  double entropy_closed_form = 0.0;
};

/// Gamma = exp(-sum_j beta D_j a_j^dag a_j) / Z built from a dense
/// eigendecomposition. Needs beta D_j n_max >= 25.
GibbsReport gibbs_occupation_check(int n_max, const std::vector<double>& betaD);

/// A word of creation ("a0*") and annihilation ("a0") operators.
struct WickOp {
  int mode = 0;
  bool dagger = false;
};
std::vector<WickOp> parse_word(std::string_view word);

struct WickReport {
  double trace = 0.0;  // Tr(word Gamma)
  double pairing = 0.0;
  double deviation = 0.0;
};

/// Throws WordTooLong for more than four operators.
WickReport wick_check(int n_max, const std::vector<double>& betaD, std::string_view word);
/// Pairing value from the Bose-Einstein two-point functions.
double wick_pairing(const std::vector<WickOp>& word, const std::vector<double>& occupation);

struct StaircaseStep {
  int n_max = 0;
  double weyl = 0.0;
  double bogoliubov = 0.0;
};

/// Weyl (eps = 1/2) and Bogoliubov (phi = 0.3) residuals on a fixed window of
/// at most 3 quanta for n_max in {12, 18, 24, 30}.
std::vector<StaircaseStep> convergence_staircase();
bool staircase_monotone(const std::vector<StaircaseStep>& steps);

/// Every check at its reference parameters.
std::vector<FockCheck> fock_checks();

}  // namespace bose2d
