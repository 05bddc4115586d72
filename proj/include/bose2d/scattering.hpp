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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bose2d {

/// Nonnegative radial potential with compact support. Either a soft disk
/// v(r) = v0 for r <= R0, or a table interpolated linearly in r.
class RadialPotential {
 public:
  static RadialPotential soft_disk(double v0, double R0);
  static RadialPotential table(std::vector<double> r, std::vector<double> v);
  /// v = 0 with a nominal support radius, used for the free case.
  static RadialPotential zero(double R0);

  double operator()(double r) const;
  /// Value just inside the open interval (lo, hi) nearest r; used so a jump
  /// at a cell edge is seen from the correct side.
  double inside(double r, double lo, double hi) const;
  double support_radius() const { return support_; }
  /// Radii in (0, R0] where v is not smooth; a solver mesh must contain them.
  std::vector<double> breakpoints() const;
  bool is_zero() const;
  double value_at_origin() const { return (*this)(0.0); }
  /// v(r / lambda) / lambda^2, whose scattering length is lambda * a(v).
  RadialPotential scaled(double lambda) const;
  /// Radii multiplied by `unit`, values unchanged.
  RadialPotential with_radius_unit(double unit) const;

 private:
  enum class Kind { SoftDisk, Table };
  Kind kind_ = Kind::SoftDisk;
  double v0_ = 0.0;
  double support_ = 0.0;
  std::vector<double> r_, v_;
};

/// Two-column text (r, v); a non-numeric first line is taken as a header and
/// lines starting with '#' are skipped.
RadialPotential read_potential_table(std::istream& in);
RadialPotential load_potential_table(const std::string& path);

struct ScatteringSolution {
  std::vector<double> r;     // mesh on [0, R], contains every breakpoint
  std::vector<double> phi;   // normalised so phi(R) = 1
  std::vector<double> dphi;  // phi'
  double R = 0.0;
  double support_radius = 0.0;
  double scattering_length = 0.0;
  double functional_value = 0.0;
  /// Scattering length re-extracted after continuing the solve to 2R.
  double scattering_length_2R = 0.0;

  /// phi at arbitrary r in [0, R] by cubic Hermite interpolation; log profile
  /// beyond R.
  double phi_at(double radius) const;
};

struct ScatteringOptions {
  int interior_cells = 2000;
  int exterior_cells = 2000;
};

/// Solves phi'' + phi'/r = (v/2) phi outward from the origin and extracts the
/// scattering length by matching phi to log(r/a)/log(R/a) at R.
ScatteringSolution solve_scattering(const RadialPotential& v, double R, double tol = 1e-10,
                                    const ScatteringOptions& options = {});

/// 2 pi int (phi'^2 + v phi^2 / 2) r dr over the mesh [r.front(), R] using
/// cubic Hermite reconstruction per cell.
double variational_value(const RadialPotential& v, std::span<const double> r,
                         std::span<const double> phi, std::span<const double> dphi, double R);

/// max_ij |a(R_i) - a(R_j)| / a(R_1); zero when a vanishes identically.
double r_independence_report(const RadialPotential& v, std::span<const double> R_list,
                             double tol = 1e-10);

}  // namespace bose2d
