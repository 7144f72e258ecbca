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

#ifndef AASBOUND_PATTERN_HPP
#define AASBOUND_PATTERN_HPP

#include <algorithm>
#include <stdexcept>

#include <Eigen/Core>

#include "aasbound/units.hpp"

namespace aasbound {

/// Parametric horizontal-cut radiator of an element or sub-array: a parabolic
/// main lobe in dB clipped at the front-to-back floor.
template <typename Scalar = double>
struct ElementPatternParams {
  Scalar gain_dbi{};                  ///< peak gain at boresight
  Scalar hpbw_deg = Scalar(85);       ///< half-power beamwidth
  Scalar front_to_back_db = Scalar(30);  ///< attenuation floor, positive

  void validate() const {
    require_finite(gain_dbi, "peak gain");
    require_finite(hpbw_deg, "half-power beamwidth");
    require_finite(front_to_back_db, "front-to-back ratio");
    if (!(hpbw_deg > Scalar(0))) throw std::invalid_argument("half-power beamwidth must be > 0");
    if (!(front_to_back_db > Scalar(0))) throw std::invalid_argument("front-to-back ratio must be > 0");
  }

  friend bool operator==(const ElementPatternParams&, const ElementPatternParams&) = default;
};

/// Relative pattern in dB, -min{12 (phi/hpbw)^2, A_m}. Input is wrapped into (-180, 180].
template <typename Scalar>
Scalar attenuation(const ElementPatternParams<Scalar>& params, Scalar phi_deg) {
  const Scalar phi = wrap_degrees(phi_deg);
  const Scalar ratio = phi / params.hpbw_deg;
  return -std::min(Scalar(12) * ratio * ratio, params.front_to_back_db);
}

template <typename Scalar>
Scalar element_gain(const ElementPatternParams<Scalar>& params, Scalar phi_deg) {
  return params.gain_dbi + attenuation(params, phi_deg);
}

/// Field amplitude (linear, volts-like) of the radiator, 10^(gain/20).
template <typename Scalar>
Scalar element_field(const ElementPatternParams<Scalar>& params, Scalar phi_deg) {
  return std::pow(Scalar(10), element_gain(params, phi_deg) / Scalar(20));
}

template <typename Scalar, typename Derived>
Eigen::Array<Scalar, Eigen::Dynamic, 1> element_gain(const ElementPatternParams<Scalar>& params,
                                                     const Eigen::DenseBase<Derived>& phi_deg) {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> out(phi_deg.size());
  for (Eigen::Index i = 0; i < phi_deg.size(); ++i) {
    out(i) = element_gain(params, Scalar(phi_deg.derived().coeff(i)));
  }
  return out;
}

}  // namespace aasbound

#endif  // AASBOUND_PATTERN_HPP
