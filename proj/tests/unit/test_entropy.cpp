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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "bose2d/entropy.hpp"
#include "bose2d/error.hpp"

using namespace bose2d;
using doctest::Approx;

namespace {
double entropy_oracle(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  double s = 0.0;
  for (double l : es.eigenvalues())
    if (l > 0.0) s -= l * std::log(l);
  return s;
}

double sum_tail(double x, int M, bool weighted) {
  double s = 0.0;
  for (int n = M; n < M + 20000; ++n) s += (weighted ? n : 1) * std::exp(-x * n);
  return s;
}
}  // namespace

TEST_CASE("h function") {
  CHECK(entropy_h(0.0) == 0.0);
  CHECK(entropy_h(1.0) == 0.0);
  CHECK(entropy_h(std::exp(-1.0)) == Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(entropy_h(0.3) == Approx(-0.3 * std::log(0.3)));
}

TEST_CASE("density matrices") {
  CHECK(vn_entropy(DensityMatrix::maximally_mixed(16)) == Approx(std::log(16.0)).epsilon(1e-13));
  const std::vector<double> w10{1.0, 0.0}, w01{0.0, 1.0};
  const auto a = DensityMatrix::diagonal(w10), b = DensityMatrix::diagonal(w01);
  CHECK(trace_distance(a, b) == Approx(2.0));
  CHECK(vn_entropy(a) == 0.0);

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{bad}, Error);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{bad}, Error);
  CHECK_THROWS_AS(trace_distance(a, DensityMatrix::maximally_mixed(3)), Error);

  std::mt19937_64 rng(11);
  const auto g = random_density_matrix(12, rng);
  CHECK(g.matrix().trace().real() == Approx(1.0).epsilon(1e-14));
  CHECK(vn_entropy(g) == Approx(entropy_oracle(g.matrix())).epsilon(1e-12));
  for (int i = 1; i < g.dim(); ++i) CHECK(g.spectrum()[i] <= g.spectrum()[i - 1]);

  const auto U = random_unitary(12, rng);
  CHECK((U.adjoint() * U - Eigen::MatrixXcd::Identity(12, 12)).norm() < 1e-13);
}

TEST_CASE("eigenvalue difference inequality") {
  const auto m = DensityMatrix::maximally_mixed(4);
  const auto same = eigenvalue_difference_check(m, m);
  CHECK(same.lhs == 0.0);
  CHECK(same.holds);

  const std::vector<double> w10{1.0, 0.0}, w01{0.0, 1.0};
  const auto flip =
      eigenvalue_difference_check(DensityMatrix::diagonal(w10), DensityMatrix::diagonal(w01));
  CHECK(flip.lhs == 0.0);
  CHECK(flip.rhs == Approx(2.0));
  CHECK(flip.holds);

  const auto cases = eigenvalue_difference_suite(42);
  CHECK(cases.size() == 200);
  for (const auto& c : cases) {
    CHECK(c.holds);
    CHECK(c.dim >= 2);
    CHECK(c.dim <= 64);
  }
}

TEST_CASE("Fannes inequality") {
  const auto m = DensityMatrix::maximally_mixed(8);
  const auto same = fannes_check(m, m, 8);
  CHECK(same.lhs == 0.0);
  CHECK(same.rhs == 0.0);
  CHECK(same.holds);

  std::mt19937_64 rng(5);
  const auto g = random_density_matrix(16, rng);
  const Eigen::MatrixXcd mixed = 0.95 * g.matrix() + 0.05 * Eigen::MatrixXcd::Identity(16, 16) / 16.0;
  const auto fc = fannes_check(g, DensityMatrix(mixed), 16);
  CHECK(fc.applicable);
  CHECK(fc.holds);

  const std::vector<double> w10{1.0, 0.0}, w01{0.0, 1.0};
  CHECK_FALSE(fannes_check(DensityMatrix::diagonal(w10), DensityMatrix::diagonal(w01), 2).applicable);

  const auto cases = fannes_suite(42);
  CHECK(cases.size() == 200);
  for (const auto& c : cases) {
    CHECK(c.applicable);
    CHECK(c.holds);
  }
}

TEST_CASE("suites are reproducible and serialisable") {
  const auto a = fannes_suite(9, 20, 16), b = fannes_suite(9, 20, 16);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].lhs == b[i].lhs);
  }
  CHECK(case_seed(1, 2) != case_seed(1, 3));
  CHECK(case_seed(1, 2) != case_seed(2, 2));
  const auto doc = nlohmann::json::parse(suite_json(a));
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 20);
  CHECK(doc[0].contains("case_id"));
  CHECK(doc[0].contains("holds"));
}

TEST_CASE("geometric tails") {
  CHECK(geometric_tail(1.0, 3) == Approx(0.0787616).epsilon(1e-6));
  for (double x : {0.2, 1.0, 4.0})
    for (int M : {1, 3, 10}) {
      CHECK(geometric_tail(x, M) == Approx(sum_tail(x, M, false)).epsilon(1e-13));
      CHECK(geometric_weighted_tail(x, M) == Approx(sum_tail(x, M, true)).epsilon(1e-13));
    }
}

TEST_CASE("excluded entropy bound") {
  const std::vector<double> D0{0.7, 1.3, 2.1};
  const bool in_K[] = {true, true, false};
  for (int M : {2, 3, 4}) {
    const double exact = excluded_entropy_enumeration(D0, in_K, 1.0, M, 60);
    const auto t = truncation_tails(D0, in_K, 1.0, M);
    CHECK(exact >= 0.0);
    CHECK(exact <= t.excluded_entropy_bound);
    CHECK(t.tail_M == Approx(std::exp(-0.7 * M) + std::exp(-1.3 * M)).epsilon(1e-14));
    CHECK(t.tail_K == Approx(std::exp(-2.1)).epsilon(1e-14));
  }
}
