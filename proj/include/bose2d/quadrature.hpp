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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace bose2d::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 21-point Kronrod rule with embedded 10-point Gauss rule.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208466185200, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Piece {
  double a, b, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class F>
Piece kronrod21(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[10] * fc, g = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double x = h * kXgk[i];
    const double fs = f(c - x) + f(c + x);
    k += kWgk[i] * fs;
    if (i % 2 == 1) g += kWg[i / 2] * fs;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature on a finite interval. Bisects
/// the interval with the largest error estimate until the summed estimate
/// drops below max(abs_tol, rel_tol |I|).
template <class F>
Result integrate(const F& f, double a, double b, double abs_tol, double rel_tol,
                 int max_intervals = 4000) {
  Result r;
  if (a == b) {
    r.converged = true;
    return r;
  }
  std::priority_queue<detail::Piece> heap;
  heap.push(detail::kronrod21(f, a, b));
  double value = heap.top().value, error = heap.top().error;
  int n = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(value)) && n < max_intervals) {
    const detail::Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      heap.push(worst);
      break;
    }
    const auto left = detail::kronrod21(f, worst.a, mid);
    const auto right = detail::kronrod21(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++n;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Final re-sum; the running totals above accumulate rounding.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  r.value = value;
  r.error = error;
  r.intervals = n;
  r.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
  return r;
}

/// Integral over [a, inf) through x = a + t / (1 - t).
template <class F>
Result integrate_to_infinity(const F& f, double a, double abs_tol, double rel_tol,
                             int max_intervals = 4000) {
  auto g = [&f, a](double t) {
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    const double v = f(a + t / u) / (u * u);
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate(g, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

/// Sum of adaptive integrals over consecutive [nodes[i], nodes[i+1]].
/// Each piece is a separate call, so pieces may be evaluated in any order;
/// the sum is formed in index order.
template <class F>
Result integrate_pieces(const F& f, const std::vector<double>& nodes, double abs_tol,
                        double rel_tol) {
  Result total;
  total.converged = true;
  if (nodes.size() < 2) return total;
  const double per_piece = abs_tol / double(nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto r = integrate(f, nodes[i], nodes[i + 1], per_piece, rel_tol);
    total.value += r.value;
    total.error += r.error;
    total.intervals += r.intervals;
    total.converged = total.converged && r.converged;
  }
  return total;
}

}  // namespace bose2d::quad
