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

#include "bose2d/fock.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "bose2d/error.hpp"

namespace bose2d {

Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols())
    throw Error(ErrorCode::DimensionMismatch, "fock::expm", "matrix must be square");
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;
  const double norm = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > theta13) s = int(std::ceil(std::log2(norm / theta13)));
  const Eigen::MatrixXd X = A / std::ldexp(1.0, s);
  const auto n = X.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd X2 = X * X, X4 = X2 * X2, X6 = X4 * X2;
  const Eigen::MatrixXd U =
      X * (X6 * (b[13] * X6 + b[11] * X4 + b[9] * X2) + b[7] * X6 + b[5] * X4 + b[3] * X2 +
           b[1] * I);
  const Eigen::MatrixXd V =
      X6 * (b[12] * X6 + b[10] * X4 + b[8] * X2) + b[6] * X6 + b[4] * X4 + b[2] * X2 + b[0] * I;
  Eigen::MatrixXd R = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < s; ++k) R = R * R;
  return R;
}

// ------------------------------------------------------------- Fock space

FockSpace::FockSpace(int modes, int n_max) : modes_(modes), n_max_(n_max) {
  if (modes < 1 || modes > 3 || n_max < 1)
    throw Error(ErrorCode::InvalidArgument, "fock::FockSpace", "need 1..3 modes and n_max >= 1");
  dim_ = 1;
  for (int j = 0; j < modes; ++j) dim_ *= n_max + 1;
  int stride = 1;
  for (int j = 0; j < modes; ++j) {
    Eigen::MatrixXd aj = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int idx = 0; idx < dim_; ++idx) {
      const int nj = occupation(idx, j);
      if (nj > 0) aj(idx - stride, idx) = std::sqrt(double(nj));
    }
    a_.push_back(std::move(aj));
    stride *= n_max + 1;
  }
}

int FockSpace::occupation(int index, int j) const {
  for (int k = 0; k < j; ++k) index /= n_max_ + 1;
  return index % (n_max_ + 1);
}

Eigen::MatrixXd FockSpace::number(int j) const { return adag(j) * a(j); }

Eigen::MatrixXd FockSpace::total_number() const {
  Eigen::MatrixXd N = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int j = 0; j < modes_; ++j) N += number(j);
  return N;
}

Eigen::MatrixXd FockSpace::top_layer(int j) const {
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int idx = 0; idx < dim_; ++idx)
    if (occupation(idx, j) == n_max_) P(idx, idx) = 1.0;
  return P;
}

Eigen::VectorXd FockSpace::low_mask(int limit) const {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(dim_);
  for (int idx = 0; idx < dim_; ++idx) {
    bool low = true;
    for (int j = 0; j < modes_; ++j) low = low && occupation(idx, j) <= limit;
    m(idx) = low ? 1.0 : 0.0;
  }
  return m;
}

Eigen::VectorXd FockSpace::total_mask(int limit) const {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(dim_);
  for (int idx = 0; idx < dim_; ++idx) {
    int total = 0;
    for (int j = 0; j < modes_; ++j) total += occupation(idx, j);
    m(idx) = total <= limit ? 1.0 : 0.0;
  }
  return m;
}

Eigen::VectorXd FockSpace::vacuum() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_);
  v(0) = 1.0;
  return v;
}

double FockSpace::commutator_defect() const {
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(dim_, dim_);
  double worst = 0.0;
  for (int j = 0; j < modes_; ++j)
    for (int k = 0; k < modes_; ++k) {
      const Eigen::MatrixXd ak_dag = adag(k);
      Eigen::MatrixXd c = a(j) * ak_dag - ak_dag * a(j);
      if (j == k) c -= I - double(n_max_ + 1) * top_layer(j);
      worst = std::max(worst, c.cwiseAbs().maxCoeff());
      worst = std::max(worst, (a(j) * a(k) - a(k) * a(j)).cwiseAbs().maxCoeff());
    }
  return worst;
}

namespace {

// Largest column norm of X over the masked basis states.
double restricted_norm(const Eigen::MatrixXd& X, const Eigen::VectorXd& mask) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < X.cols(); ++c)
    if (mask(c) > 0.0) worst = std::max(worst, X.col(c).norm());
  return worst;
}

double unitarity_defect(const FockSpace& fs, const Eigen::MatrixXd& U) {
  const Eigen::VectorXd mask = fs.low_mask(fs.n_max() - 2);
  const Eigen::MatrixXd D = U.transpose() * U - Eigen::MatrixXd::Identity(fs.dim(), fs.dim());
  double worst = 0.0;
  for (int i = 0; i < fs.dim(); ++i)
    for (int j = 0; j < fs.dim(); ++j)
      if (mask(i) > 0.0 && mask(j) > 0.0) worst = std::max(worst, std::abs(D(i, j)));
  return worst;
}

Eigen::MatrixXd weyl_operator(const FockSpace& fs, double epsilon) {
  const double r = std::sqrt(epsilon);
  return expm(r * (fs.adag(0) - fs.a(0)));
}

}  // namespace

// ------------------------------------------------------------- checks

WeylReport weyl_conjugation_check(int n_max, double epsilon, int support) {
  constexpr const char* where = "fock::weyl_conjugation_check";
  if (epsilon < 0.0 || support < 0 || 2 * support > n_max)
    throw Error(ErrorCode::InvalidArgument, where, "need eps >= 0 and support <= n_max / 2");
  const FockSpace fs(1, n_max);
  const Eigen::MatrixXd W = weyl_operator(fs, epsilon);
  const Eigen::VectorXd psi = W * fs.vacuum();
  if (psi(n_max) * psi(n_max) > 1e-10)
    throw Error(ErrorCode::CutoffTooSmall, where, "displaced vacuum reaches the top level");
  const Eigen::VectorXd mask = fs.total_mask(support);
  WeylReport r;
  const Eigen::MatrixXd X = W.transpose() * fs.a(0) * W -
                            std::sqrt(epsilon) * Eigen::MatrixXd::Identity(fs.dim(), fs.dim()) -
                            fs.a(0);
  r.residual = restricted_norm(X, mask);
  r.mean_occupation = psi.dot(fs.number(0) * psi);
  r.unitarity_defect = unitarity_defect(fs, W);
  const double e1 = 0.25 * epsilon, e2 = 0.25 * epsilon;
  const double e12 = std::pow(std::sqrt(e1) + std::sqrt(e2), 2);
  r.group_law =
      restricted_norm(weyl_operator(fs, e1) * weyl_operator(fs, e2) - weyl_operator(fs, e12), mask);
  return r;
}

BogoliubovReport bogoliubov_conjugation_check(int n_max, double phi, int limit) {
  constexpr const char* where = "fock::bogoliubov_conjugation_check";
  if (std::abs(phi) > 0.5)
    throw Error(ErrorCode::InvalidArgument, where, "|phi| must not exceed 1/2");
  if (limit < 0) limit = n_max / 4;
  const FockSpace fs(2, n_max);
  const Eigen::MatrixXd& ap = fs.a(0);
  const Eigen::MatrixXd& am = fs.a(1);
  const Eigen::MatrixXd B = phi * (fs.adag(0) * fs.adag(1) - am * ap);
  const Eigen::MatrixXd U = expm(B);
  const Eigen::VectorXd psi = U * fs.vacuum();
  double top = 0.0;
  for (int idx = 0; idx < fs.dim(); ++idx)
    if (fs.occupation(idx, 0) == n_max || fs.occupation(idx, 1) == n_max) top += psi(idx) * psi(idx);
  if (top > 1e-10)
    throw Error(ErrorCode::CutoffTooSmall, where, "squeezed vacuum reaches the top layer");
  BogoliubovReport r;
  r.c = std::cosh(phi);
  r.s = std::sinh(phi);
  // U is orthogonal, so e^{-B} = U^T.
  const Eigen::MatrixXd X = U.transpose() * ap * U - (r.c * ap + r.s * fs.adag(1));
  r.residual = restricted_norm(X, fs.total_mask(limit));
  r.squeezed_occupation = psi.dot(fs.number(0) * psi);
  r.unitarity_defect = unitarity_defect(fs, U);
  return r;
}

GibbsReport gibbs_occupation_check(int n_max, const std::vector<double>& betaD) {
  constexpr const char* where = "fock::gibbs_occupation_check";
  const int modes = int(betaD.size());
  for (double x : betaD)
    if (!(x > 0.0) || x * n_max < 25.0)
      throw Error(ErrorCode::CutoffTooSmall, where, "need beta D n_max >= 25 on every mode");
  const FockSpace fs(modes, n_max);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(fs.dim(), fs.dim());
  for (int j = 0; j < modes; ++j) H += betaD[std::size_t(j)] * fs.number(j);
  Eigen::MatrixXd G = expm(-H);
  G /= G.trace();
  GibbsReport r;
  double closed = 0.0;
  for (int j = 0; j < modes; ++j) {
    const double x = betaD[std::size_t(j)];
    const double n = (fs.number(j) * G).trace();
    const double exact = 1.0 / std::expm1(x);
    r.occupation.push_back(n);
    r.deviation.push_back(std::abs(n - exact));
    closed += x * exact - std::log(-std::expm1(-x));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (G + G.transpose()),
                                                    Eigen::EigenvaluesOnly);
  double S = 0.0;
  for (double l : es.eigenvalues())
    if (l > 0.0) S -= l * std::log(l);
  r.entropy = S;
  r.entropy_closed_form = closed;
  return r;
}

std::vector<WickOp> parse_word(std::string_view word) {
  std::vector<WickOp> ops;
  std::size_t i = 0;
  while (i < word.size()) {
    if (std::isspace(static_cast<unsigned char>(word[i]))) {
      ++i;
      continue;
    }
    if (word[i] != 'a' || i + 1 >= word.size() ||
        !std::isdigit(static_cast<unsigned char>(word[i + 1])))
      throw Error(ErrorCode::ParseError, "fock::parse_word",
                  "expected a<mode> or a<mode>* in '" + std::string(word) + "'");
    WickOp op;
    op.mode = word[i + 1] - '0';
    i += 2;
    if (i < word.size() && word[i] == '*') {
      op.dagger = true;
      ++i;
    }
    ops.push_back(op);
  }
  return ops;
}

double wick_pairing(const std::vector<WickOp>& word, const std::vector<double>& occupation) {
  if (word.empty()) return 1.0;
  if (word.size() % 2 == 1) return 0.0;
  const WickOp first = word.front();
  double total = 0.0;
  for (std::size_t j = 1; j < word.size(); ++j) {
    const WickOp w = word[j];
    if (w.mode != first.mode || w.dagger == first.dagger) continue;
    const double n = occupation[std::size_t(first.mode)];
    const double contraction = first.dagger ? n : 1.0 + n;
    std::vector<WickOp> rest;
    for (std::size_t k = 1; k < word.size(); ++k)
      if (k != j) rest.push_back(word[k]);
    total += contraction * wick_pairing(rest, occupation);
  }
  return total;
}

WickReport wick_check(int n_max, const std::vector<double>& betaD, std::string_view word) {
  constexpr const char* where = "fock::wick_check";
  const auto ops = parse_word(word);
  if (ops.size() > 4) throw Error(ErrorCode::WordTooLong, where, "at most four operators");
  for (const auto& op : ops)
    if (op.mode >= int(betaD.size()))
      throw Error(ErrorCode::InvalidArgument, where, "operator acts on a missing mode");
  const FockSpace fs(int(betaD.size()), n_max);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(fs.dim(), fs.dim());
  for (std::size_t j = 0; j < betaD.size(); ++j) H += betaD[j] * fs.number(int(j));
  Eigen::MatrixXd G = expm(-H);
  G /= G.trace();
  Eigen::MatrixXd O = Eigen::MatrixXd::Identity(fs.dim(), fs.dim());
  for (const auto& op : ops) O = O * (op.dagger ? fs.adag(op.mode) : fs.a(op.mode));
  std::vector<double> occ;
  for (double x : betaD) occ.push_back(1.0 / std::expm1(x));
  WickReport r;
  r.trace = (O * G).trace();
  r.pairing = wick_pairing(ops, occ);
  r.deviation = std::abs(r.trace - r.pairing);
  return r;
}

std::vector<StaircaseStep> convergence_staircase() {
  std::vector<StaircaseStep> steps;
  for (int n_max : {12, 18, 24, 30}) {
    StaircaseStep s;
    s.n_max = n_max;
    s.weyl = weyl_conjugation_check(n_max, 0.5, 3).residual;
    s.bogoliubov = bogoliubov_conjugation_check(n_max, 0.3, 3).residual;
    steps.push_back(s);
  }
  return steps;
}

bool staircase_monotone(const std::vector<StaircaseStep>& steps) {
  // Once a residual reaches rounding level it may jitter; 1e-14 is the floor.
  constexpr double floor = 1e-14;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].weyl > std::max(steps[i - 1].weyl, floor)) return false;
    if (steps[i].bogoliubov > std::max(steps[i - 1].bogoliubov, floor)) return false;
  }
  return true;
}

std::vector<FockCheck> fock_checks() {
  std::vector<FockCheck> out;
  auto add = [&out](std::string name, double value, double tol) {
    out.push_back({std::move(name), value, tol, value <= tol});
  };
  add("commutator_top_layer", FockSpace(2, 12).commutator_defect(), 1e-12);

  add("weyl_identity", weyl_conjugation_check(30, 0.0, 7).residual, 1e-14);
  const auto w = weyl_conjugation_check(30, 1.0, 7);
  add("weyl_residual", w.residual, 1e-8);
  add("weyl_mean_occupation", std::abs(w.mean_occupation - 1.0), 1e-10);
  add("weyl_group_law", w.group_law, 1e-8);
  add("weyl_unitarity", w.unitarity_defect, 1e-10);

  add("bogoliubov_identity", bogoliubov_conjugation_check(24, 0.0).residual, 1e-14);
  const auto b = bogoliubov_conjugation_check(30, 0.3);
  add("bogoliubov_residual", b.residual, 1e-8);
  add("bogoliubov_squeezed_occupation",
      std::abs(b.squeezed_occupation - std::pow(std::sinh(0.3), 2)), 1e-10);
  add("bogoliubov_hyperbolic", std::abs(b.c * b.c - b.s * b.s - 1.0), 1e-14);
  add("bogoliubov_unitarity", b.unitarity_defect, 1e-10);

  add("gibbs_log2", gibbs_occupation_check(40, {std::log(2.0)}).deviation[0], 1e-9);
  add("gibbs_beta1", gibbs_occupation_check(30, {1.0}).deviation[0], 1e-10);
  const auto g2 = gibbs_occupation_check(30, {1.0, 1.5});
  add("gibbs_two_mode", std::max(g2.deviation[0], g2.deviation[1]), 1e-9);
  add("gibbs_entropy", std::abs(g2.entropy - g2.entropy_closed_form), 1e-9);

  add("wick_aa", wick_check(30, {1.0}, "a0 a0").deviation, 1e-9);
  add("wick_adad_aa", wick_check(30, {1.0}, "a0* a0* a0 a0").deviation, 1e-9);
  add("wick_ada_ada", wick_check(30, {1.0}, "a0* a0 a0* a0").deviation, 1e-9);
  add("wick_two_mode", wick_check(30, {1.0, 1.5}, "a0* a1* a1 a0").deviation, 1e-9);

  const auto steps = convergence_staircase();
  add("staircase_monotone", staircase_monotone(steps) ? 0.0 : 1.0, 0.0);
  return out;
}

}  // namespace bose2d
