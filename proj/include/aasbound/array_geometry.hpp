// SPDX-License-Identifier: Apache-2.0
//
// aasbound - spatial upper bound of radiated power for active antenna arrays
// Copyright (C) 2026 The aasbound authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AASBOUND_ARRAY_GEOMETRY_HPP
#define AASBOUND_ARRAY_GEOMETRY_HPP

#include <complex>
#include <utility>
#include <stdexcept>

#include "aasbound/units.hpp"

namespace aasbound {

/// Two identical radiators on the y-axis, spacing in wavelengths.
template <typename Scalar = double>
struct TwoElementArray {
  Scalar spacing_wavelengths = Scalar(0.5);

  void validate() const {
    require_finite(spacing_wavelengths, "element spacing");
    if (!(spacing_wavelengths > Scalar(0))) throw std::invalid_argument("element spacing must be > 0");
  }

  friend bool operator==(const TwoElementArray&, const TwoElementArray&) = default;
};

/// Uniform M x N grid of sub-arrays. Each (row, column) position carries
/// `polarizations` independent RF chains; spacings in wavelengths.
template <typename Scalar = double>
struct ArrayGeometry {
  int rows = 1;
  int cols = 1;
  Scalar vertical_spacing_wavelengths = Scalar(0.5);
  Scalar horizontal_spacing_wavelengths = Scalar(0.5);
  int polarizations = 1;

  void validate() const {
    if (rows < 1 || cols < 1) throw std::invalid_argument("array needs at least one row and one column");
    require_finite(vertical_spacing_wavelengths, "vertical spacing");
    require_finite(horizontal_spacing_wavelengths, "horizontal spacing");
    if (!(vertical_spacing_wavelengths > Scalar(0)) || !(horizontal_spacing_wavelengths > Scalar(0))) {
      throw std::invalid_argument("array spacings must be > 0");
    }
    if (polarizations != 1 && polarizations != 2) throw std::invalid_argument("polarizations must be 1 or 2");
  }

  int elements_per_polarization() const { return rows * cols; }
  int branch_count() const { return rows * cols * polarizations; }

  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
};

/// Progressive excitation phase per row and per column step, kept in (-pi, pi].
template <typename Scalar = double>
class SteeringConfig {
 public:
  SteeringConfig() = default;
  SteeringConfig(Scalar delta_phi_v, Scalar delta_phi_h)
      : delta_phi_v_(wrap_phase(delta_phi_v)), delta_phi_h_(wrap_phase(delta_phi_h)) {}

  Scalar delta_phi_v() const { return delta_phi_v_; }
  Scalar delta_phi_h() const { return delta_phi_h_; }

  /// Excitation phase of element (m, n).
  Scalar phase(int m, int n) const { return Scalar(m) * delta_phi_v_ + Scalar(n) * delta_phi_h_; }

  friend bool operator==(const SteeringConfig&, const SteeringConfig&) = default;

 private:
  Scalar delta_phi_v_{};
  Scalar delta_phi_h_{};
};

/// Path-difference phase k d sin(phi) of the second element.
template <typename Scalar>
Scalar geometric_phase(const TwoElementArray<Scalar>& array, Scalar phi_deg) {
  require_finite(phi_deg, "angle");
  return Scalar(2) * kPi<Scalar> * array.spacing_wavelengths * std::sin(deg_to_rad(phi_deg));
}

/// Complex two-element factor 1 + exp(j(psi + dphi)).
template <typename Scalar>
std::complex<Scalar> af2(const TwoElementArray<Scalar>& array, Scalar phi_deg, Scalar delta_phi) {
  return Scalar(1) + std::polar(Scalar(1), geometric_phase(array, phi_deg) + delta_phi);
}

/// Closed form 2 |cos(pi d sin(phi) + dphi / 2)|.
template <typename Scalar>
Scalar af2_magnitude(const TwoElementArray<Scalar>& array, Scalar phi_deg, Scalar delta_phi) {
  require_finite(phi_deg, "angle");
  require_finite(delta_phi, "phase");
  const Scalar arg = kPi<Scalar> * array.spacing_wavelengths * std::sin(deg_to_rad(phi_deg)) + delta_phi / Scalar(2);
  return Scalar(2) * std::abs(std::cos(arg));
}

/// Per-row and per-column geometric phase steps toward (theta, phi).
template <typename Scalar>
std::pair<Scalar, Scalar> geometric_phase_steps(const ArrayGeometry<Scalar>& geometry, Scalar theta_deg,
                                                Scalar phi_deg) {
  const Scalar theta = deg_to_rad(theta_deg);
  const Scalar phi = deg_to_rad(phi_deg);
  const Scalar two_pi = Scalar(2) * kPi<Scalar>;
  return {two_pi * geometry.vertical_spacing_wavelengths * std::cos(theta),
          two_pi * geometry.horizontal_spacing_wavelengths * std::sin(theta) * std::sin(phi)};
}

/// Array factor sum_{m,n} w_{m,n} v_{m,n}(theta, phi) with unit-magnitude weights.
template <typename Scalar>
std::complex<Scalar> af_aas(const ArrayGeometry<Scalar>& geometry, const SteeringConfig<Scalar>& steering,
                            Scalar theta_deg, Scalar phi_deg) {
  require_finite(theta_deg, "theta");
  require_finite(phi_deg, "phi");
  const auto [row_step, col_step] = geometric_phase_steps(geometry, theta_deg, phi_deg);
  std::complex<Scalar> sum{};
  for (int m = 0; m < geometry.rows; ++m) {
    for (int n = 0; n < geometry.cols; ++n) {
      const Scalar phase = Scalar(m) * row_step + Scalar(n) * col_step + steering.phase(m, n);
      sum += std::polar(Scalar(1), phase);
    }
  }
  return sum;
}

/// Excitation gradients that cancel the geometric phase toward (theta0, phi0).
template <typename Scalar>
SteeringConfig<Scalar> compensate_steering(const ArrayGeometry<Scalar>& geometry, Scalar theta0_deg,
                                           Scalar phi0_deg) {
  require_finite(theta0_deg, "theta");
  require_finite(phi0_deg, "phi");
  const auto [row_step, col_step] = geometric_phase_steps(geometry, theta0_deg, phi0_deg);
  return SteeringConfig<Scalar>(-row_step, -col_step);
}

/// Two-element counterpart: the relative phase that points the pair at phi0.
template <typename Scalar>
Scalar compensate_steering(const TwoElementArray<Scalar>& array, Scalar phi0_deg) {
  return wrap_phase(-geometric_phase(array, phi0_deg));
}

}  // namespace aasbound

#endif  // AASBOUND_ARRAY_GEOMETRY_HPP
