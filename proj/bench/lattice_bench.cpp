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

// Times the serial and OpenMP shell kernels on one lattice and checks that
// both give the same numbers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "bose2d/config.hpp"
#include "bose2d/kernels.hpp"
#include "bose2d/lattice.hpp"
#include "bose2d/softpot.hpp"

using namespace bose2d;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = INFINITY;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const double rho_a2 = argc > 1 ? std::atof(argv[1]) : 1e-8;
  const double t = argc > 2 ? std::atof(argv[2]) : 0.1;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 5;

  const GasParameters p = parameters_at(1.0, rho_a2, t);
  const SoftPotential pot = SoftPotential::from_parameters(p);
  const Interaction g = pot.interaction();
  const MomentumLattice lat(p.L, default_cutoff(p.rho, g, p.T));
  std::printf("rho_a2=%g T/Tc=%g shells=%zu points=%zu threads=%d\n", rho_a2, t,
              lat.shell_count(), lat.point_count(), kernels::max_threads());

  FieldSpec spec{p.rho, p.rho, p.T, g};
  BogoliubovField fs, fo;
  const double t_build_s = best_of(reps, [&] { fs = build_field(lat, spec, Backend::Serial); });
  const double t_build_o = best_of(reps, [&] { fo = build_field(lat, spec, Backend::OpenMP); });

  SumOptions os, oo;
  os.backend = Backend::Serial;
  oo.backend = Backend::OpenMP;
  LemmaSums ss, so;
  const double t_sum_s = best_of(reps, [&] { ss = lemma_sums(fs, os); });
  const double t_sum_o = best_of(reps, [&] { so = lemma_sums(fo, oo); });

  auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(x), 1e-300); };
  std::printf("%-14s %12s %12s %8s\n", "kernel", "serial[s]", "omp[s]", "speedup");
  std::printf("%-14s %12.6f %12.6f %8.2f\n", "build_field", t_build_s, t_build_o,
              t_build_s / t_build_o);
  std::printf("%-14s %12.6f %12.6f %8.2f\n", "lemma_sums", t_sum_s, t_sum_o, t_sum_s / t_sum_o);
  const double diff = std::max({rel(ss.S2, so.S2), rel(ss.SC, so.SC), rel(ss.Q2 + 1e-300, so.Q2 + 1e-300)});
  std::printf("max relative difference serial vs omp: %.3e\n", diff);
  return diff < 1e-12 ? 0 : 1;
}
