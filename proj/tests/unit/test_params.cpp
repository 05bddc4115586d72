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
#include <cstring>
#include <numbers>

#include "bose2d/error.hpp"
#include "bose2d/params.hpp"

using namespace bose2d;
using doctest::Approx;

TEST_CASE("diluteness parameters at rho a^2 = 1e-10") {
  const double lg = 10.0 * std::log(10.0);
  CHECK(diluteness_Y(1e-10) == Approx(1.0 / lg).epsilon(1e-15));
  CHECK(diluteness_delta(1e-10) == Approx(2.0 / (lg + std::log(lg))).epsilon(1e-15));
  CHECK(diluteness_Y(1e-10) == Approx(0.0434294).epsilon(1e-6));
  CHECK(diluteness_delta(1e-10) == Approx(0.0764454).epsilon(1e-6));
}

TEST_CASE("critical temperature") {
  const double d = diluteness_delta(1e-10);
  CHECK(critical_temperature(1.0, d) == Approx(4.0 * std::numbers::pi / std::abs(std::log(d))));
  CHECK(critical_temperature(1.0, d) == Approx(4.887396821).epsilon(1e-9));
  CHECK(critical_temperature(3.0, d) == Approx(3.0 * critical_temperature(1.0, d)));
}

TEST_CASE("log|log| = 1 forces delta = 2/(e+1)") {
  const double x = std::exp(-std::numbers::e);
  CHECK(diluteness_delta(x) == Approx(2.0 / (std::numbers::e + 1.0)).epsilon(1e-14));
}

TEST_CASE("derived fields") {
  const auto p = derive_parameters(2.0, 1e-4, 0.3);
  CHECK(p.gas_parameter() == Approx(2e-8));
  CHECK(p.Y == Approx(diluteness_Y(2e-8)));
  CHECK(p.L == Approx(std::pow(p.Y, -2.5) / std::sqrt(2.0)));
  CHECK(p.particle_number() == Approx(p.rho * p.L * p.L));
  CHECK(p.Rtilde == Approx(p.a / std::sqrt(p.gas_parameter() * p.Y)));
  // Y^{11/2} rho^{-1/2} lies below a here, so b sits at the log-midpoint.
  CHECK(p.b == Approx(std::sqrt(p.a / std::sqrt(2.0))));
  const auto tiny = derive_from_gas_parameter(1.0, 1e-300, 0.0);
  CHECK(tiny.b == Approx(std::pow(tiny.Y, 5.5)));
  CHECK(tiny.b > tiny.a);
  CHECK(p.beta() == Approx(1.0 / 0.3));

  const auto q = derive_parameters(2.0, 1e-4, 0.3);
  CHECK(std::memcmp(&p.Y, &q.Y, sizeof(double) * 5) == 0);
  CHECK(derive_from_gas_parameter(2.0, 2e-8, 0.3).a == Approx(1e-4));
}

TEST_CASE("input validation") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { derive_parameters(-1.0, 1e-4, 0.0); }) == ErrorCode::NegativeInput);
  CHECK(code([] { derive_parameters(1.0, 1e-4, -0.1); }) == ErrorCode::NegativeInput);
  CHECK(code([] { derive_parameters(1.0, 2.0, 0.0); }) == ErrorCode::DegenerateGas);
}

TEST_CASE("BEC length condition") {
  GasParameters p = derive_parameters(1.0, 1e-4, 0.0);
  CHECK(bec_length_check(p));

  p.L = 10.0;
  p.T = 10.0;
  CHECK_FALSE(bec_length_check(p));

  // Root of T log(100 T) = 1 by bisection.
  double lo = 0.011, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::log(100.0 * mid) > 1.0 ? hi : lo) = mid;
  }
  p.T = lo;
  CHECK(bec_length_check(p));
  p.T = hi * (1.0 + 1e-9);
  CHECK_FALSE(bec_length_check(p));
}

TEST_CASE("record round trip") {
  const auto p = derive_parameters(1.5, 3e-5, 0.25, 2.5, 1e-3);
  const auto r = to_record(p);
  CHECK(r.count("rho") == 1);
  const auto q = from_record(r);
  CHECK(q.rho == p.rho);
  CHECK(q.a == p.a);
  CHECK(q.T == p.T);
  CHECK(q.b == p.b);
  CHECK(q.L == p.L);
}
