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

#include "bose2d/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

#include <json.hpp>

#include "bose2d/error.hpp"
#include "bose2d/kernels.hpp"

namespace bose2d {

namespace {

constexpr double kPsdTol = 1e-12;

Eigen::VectorXd descending_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues().reverse();
  return ev;
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* where) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch, where, "density matrices differ in dimension");
}

Eigen::MatrixXcd gaussian_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      g(i, j) = {re, im};
    }
  return g;
}

}  // namespace

double entropy_h(double x) {
  if (!(x >= -kPsdTol && x <= 1.0 + kPsdTol))
    throw Error(ErrorCode::DomainError, "entropy::entropy_h", "argument outside [0, 1]");
  if (x <= 0.0) return 0.0;
  return -x * std::log(x);
}

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd& m) {
  constexpr const char* where = "entropy::DensityMatrix";
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, where, "matrix must be square and nonempty");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kPsdTol)
    throw Error(ErrorCode::InvalidArgument, where, "matrix is not Hermitian");
  m_ = 0.5 * (m + m.adjoint());
  if (std::abs(m_.trace().real() - 1.0) > kPsdTol)
    throw Error(ErrorCode::InvalidArgument, where, "trace differs from 1");
  spectrum_ = descending_eigenvalues(m_);
  if (spectrum_.minCoeff() < -kPsdTol)
    throw Error(ErrorCode::InvalidArgument, where, "matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> weights) {
  Eigen::VectorXcd d(Eigen::Index(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) d(Eigen::Index(i)) = weights[i];
  return DensityMatrix(Eigen::MatrixXcd(d.asDiagonal()));
}

double vn_entropy(const DensityMatrix& g) {
  kernels::Accumulator acc;
  for (double l : g.spectrum()) acc.add(entropy_h(std::clamp(l, 0.0, 1.0)));
  return acc.value();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b, "entropy::trace_distance");
  return descending_eigenvalues(a.matrix() - b.matrix()).cwiseAbs().sum();
}

InequalityCheck eigenvalue_difference_check(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b, "entropy::eigenvalue_difference_check");
  InequalityCheck c;
  c.lhs = (a.spectrum() - b.spectrum()).cwiseAbs().sum();
  c.rhs = trace_distance(a, b);
  c.holds = c.lhs <= c.rhs + 1e-10;
  return c;
}

InequalityCheck fannes_check(const DensityMatrix& a, const DensityMatrix& b, int index_size) {
  constexpr const char* where = "entropy::fannes_check";
  require_same_dim(a, b, where);
  if (index_size < 1 || index_size > a.dim())
    throw Error(ErrorCode::InvalidArgument, where, "index set size must lie in [1, dim]");
  InequalityCheck c;
  const double D = trace_distance(a, b);
  c.rhs = std::log(double(index_size)) * D + (D <= 1.0 ? entropy_h(D) : 0.0);
  double diff = 0.0;
  for (int i = 0; i < index_size; ++i)
    diff += entropy_h(std::clamp(b.spectrum()(i), 0.0, 1.0)) -
            entropy_h(std::clamp(a.spectrum()(i), 0.0, 1.0));
  c.lhs = std::abs(diff);
  c.applicable = D <= 1.0 / std::numbers::e;
  c.holds = c.applicable && c.lhs <= c.rhs + 1e-10;
  return c;
}

std::uint64_t case_seed(std::uint64_t root, std::uint64_t i) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(dim, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_matrix(dim, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : 1.0;
  }
  return q;
}

std::pair<DensityMatrix, DensityMatrix> random_near_pair(int dim, double distance,
                                                         std::mt19937_64& rng) {
  DensityMatrix a = random_density_matrix(dim, rng);
  const DensityMatrix s = random_density_matrix(dim, rng);
  const double full = trace_distance(a, s);
  const double t = full > 0.0 ? std::min(1.0, distance / full) : 0.0;
  Eigen::MatrixXcd m = (1.0 - t) * a.matrix() + t * s.matrix();
  m /= m.trace().real();
  return {std::move(a), DensityMatrix(0.5 * (m + m.adjoint()))};
}

std::vector<CaseResult> eigenvalue_difference_suite(std::uint64_t root_seed, int cases,
                                                    int max_dim) {
  std::vector<CaseResult> out(std::size_t(std::max(cases, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cases; ++i) {
    CaseResult& r = out[std::size_t(i)];
    r.case_id = std::uint64_t(i);
    r.seed = case_seed(root_seed, r.case_id);
    std::mt19937_64 rng(r.seed);
    r.dim = std::uniform_int_distribution<int>(2, max_dim)(rng);
    const DensityMatrix a = random_density_matrix(r.dim, rng);
    const DensityMatrix b = random_density_matrix(r.dim, rng);
    const auto c = eigenvalue_difference_check(a, b);
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    r.holds = c.holds;
  }
  return out;
}

std::vector<CaseResult> fannes_suite(std::uint64_t root_seed, int cases, int max_dim) {
  std::vector<CaseResult> out(std::size_t(std::max(cases, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cases; ++i) {
    CaseResult& r = out[std::size_t(i)];
    r.case_id = std::uint64_t(i);
    r.seed = case_seed(root_seed, r.case_id);
    std::mt19937_64 rng(r.seed);
    r.dim = std::uniform_int_distribution<int>(2, max_dim)(rng);
    const double target = std::uniform_real_distribution<double>(1e-3, 0.99 / std::numbers::e)(rng);
    const int index_size = std::uniform_int_distribution<int>(1, r.dim)(rng);
    const auto [a, b] = random_near_pair(r.dim, target, rng);
    const auto c = fannes_check(a, b, index_size);
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    r.applicable = c.applicable;
    r.holds = c.holds;
  }
  return out;
}

std::string suite_json(const std::vector<CaseResult>& cases) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases)
    arr.push_back({{"case_id", c.case_id}, {"seed", c.seed}, {"lhs", c.lhs}, {"rhs", c.rhs},
                   {"holds", c.holds}});
  return arr.dump();
}

double geometric_tail(double x, int M) {
  return std::exp(-x * M) / -std::expm1(-x);
}

double geometric_weighted_tail(double x, int M) {
  const double q = -std::expm1(-x);
  return std::exp(-x * M) * (M + std::exp(-x) / q) / q;
}

namespace {

// Shared core of both truncation_tails overloads; mode i is counted weight[i] times.
TruncationTails tails_core(std::span<const double> D0, std::span<const double> weight,
                           std::span<const bool> in_K, double beta, int M) {
  kernels::Accumulator energy;
  for (std::size_t i = 0; i < D0.size(); ++i)
    energy.add(weight[i] * D0[i] / std::expm1(beta * D0[i]));
  const double E = energy.value();
  kernels::Accumulator tm, tk, lp, w;
  for (std::size_t i = 0; i < D0.size(); ++i) {
    const double x = beta * D0[i], n = 1.0 / std::expm1(x);
    const double others = E - D0[i] * n;
    lp.add(-weight[i] * std::log(-std::expm1(-x)));
    if (in_K[i]) {
      const double e = std::exp(-x * M);
      tm.add(weight[i] * e);
      w.add(weight[i] * beta * (others * e + D0[i] * e * (M + n)));
    } else {
      const double e = std::exp(-x);
      tk.add(weight[i] * e);
      w.add(weight[i] * beta * (others * e + D0[i] * n));
    }
  }
  TruncationTails t;
  t.tail_M = tm.value();
  t.tail_K = tk.value();
  t.log_partition = lp.value();
  t.weighted = w.value();
  t.excluded_entropy_bound = t.weighted + t.log_partition * (t.tail_M + t.tail_K);
  return t;
}

}  // namespace

TruncationTails truncation_tails(std::span<const double> D0, std::span<const bool> in_K,
                                 double beta, int M) {
  if (M < 1 || !(beta > 0.0))
    throw Error(ErrorCode::InvalidArgument, "entropy::truncation_tails", "need M >= 1, beta > 0");
  if (D0.size() != in_K.size())
    throw Error(ErrorCode::DimensionMismatch, "entropy::truncation_tails", "size mismatch");
  const std::vector<double> ones(D0.size(), 1.0);
  return tails_core(D0, ones, in_K, beta, M);
}

TruncationTails truncation_tails(const BogoliubovField& field, const TruncationParams& tp) {
  constexpr const char* where = "entropy::truncation_tails";
  if (tp.M < 1 || !(tp.beta > 0.0) || tp.K < 0.0)
    throw Error(ErrorCode::InvalidArgument, where, "need K >= 0, M >= 1, beta > 0");
  const MomentumLattice& lat = *field.lattice;
  if (lat.cutoff() * lat.cutoff() < tp.K)
    throw Error(ErrorCode::CutoffTooSmall, where, "lattice cutoff below sqrt(K)");
  const auto p2 = lat.p2();
  const auto mult = lat.multiplicity();
  std::vector<double> weight(mult.begin(), mult.end());
  // std::vector<bool> is not contiguous, so the flags live in a plain array.
  auto in_K = std::make_unique<bool[]>(p2.size());
  for (std::size_t i = 0; i < p2.size(); ++i) in_K[i] = p2[i] <= tp.K;
  const auto t = tails_core(field.D0, weight, {in_K.get(), p2.size()}, tp.beta, tp.M);
  const std::size_t last = p2.size() - 1;
  const double edge = weight[last] * std::exp(-tp.beta * field.D0[last]);
  if (edge > 1e-12 * std::max(t.tail_K + t.tail_M, 1e-300) && !in_K[last])
    throw Error(ErrorCode::CutoffTooSmall, where, "outermost shell still carries the K tail");
  return t;
}

double excluded_entropy_enumeration(std::span<const double> D0, std::span<const bool> in_K,
                                    double beta, int M, int n_max) {
  const std::size_t m = D0.size();
  if (m == 0 || m > 6 || n_max < M)
    throw Error(ErrorCode::InvalidArgument, "entropy::excluded_entropy_enumeration",
                "need 1..6 modes and n_max >= M");
  double logZ = 0.0;
  for (double d : D0) logZ -= std::log(-std::expm1(-beta * d));
  std::vector<int> n(m, 0);
  kernels::Accumulator acc;
  while (true) {
    bool in_I = true;
    double energy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      energy += beta * D0[i] * n[i];
      if (in_K[i] ? n[i] >= M : n[i] > 0) in_I = false;
    }
    if (!in_I) {
      const double lambda = std::exp(-energy - logZ);
      acc.add(lambda * (energy + logZ));
    }
    std::size_t k = 0;
    while (k < m && ++n[k] > n_max) n[k++] = 0;
    if (k == m) break;
  }
  return acc.value();
}

}  // namespace bose2d
