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

#ifndef AASBOUND_UNITS_HPP
#define AASBOUND_UNITS_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aasbound {

template <typename Scalar = double>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

/// Floor used in place of -inf for powers written in dB (silence, array nulls).
inline constexpr double kFloorDb = -400.0;

/// 20 log10(2): coherent field addition of two equal branches.
inline constexpr double kCoherentPairGainDb = 6.0205999132796239;
/// 10 log10(2): incoherent power addition of two equal branches.
inline constexpr double kIncoherentPairGainDb = 3.0102999566398120;

template <typename Scalar>
constexpr Scalar deg_to_rad(Scalar deg) {
  return deg * (kPi<Scalar> / Scalar(180));
}

template <typename Scalar>
constexpr Scalar rad_to_deg(Scalar rad) {
  return rad * (Scalar(180) / kPi<Scalar>);
}

template <typename Scalar>
void require_finite(Scalar value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

/// Wraps an angle in degrees into (-180, 180].
template <typename Scalar>
Scalar wrap_degrees(Scalar deg) {
  require_finite(deg, "angle");
  Scalar wrapped = std::fmod(deg, Scalar(360));
  if (wrapped <= Scalar(-180)) wrapped += Scalar(360);
  if (wrapped > Scalar(180)) wrapped -= Scalar(360);
  return wrapped;
}

/// Wraps a phase in radians into (-pi, pi].
template <typename Scalar>
Scalar wrap_phase(Scalar rad) {
  require_finite(rad, "phase");
  const Scalar two_pi = Scalar(2) * kPi<Scalar>;
  Scalar wrapped = std::fmod(rad, two_pi);
  if (wrapped <= -kPi<Scalar>) wrapped += two_pi;
  if (wrapped > kPi<Scalar>) wrapped -= two_pi;
  return wrapped;
}

/// dB (or dBm) to linear power; anything at or below the floor maps to zero.
template <typename Scalar>
Scalar db_to_linear(Scalar db) {
  if (!(db > Scalar(kFloorDb))) return Scalar(0);
  return std::pow(Scalar(10), db / Scalar(10));
}

/// Linear power to dB (or dBm), clamped to the floor sentinel.
template <typename Scalar>
Scalar linear_to_db(Scalar linear) {
  if (!(linear > Scalar(0))) return Scalar(kFloorDb);
  const Scalar db = Scalar(10) * std::log10(linear);
  return db < Scalar(kFloorDb) ? Scalar(kFloorDb) : db;
}

inline bool is_floor(double db) { return db <= kFloorDb; }

}  // namespace aasbound

#endif  // AASBOUND_UNITS_HPP
