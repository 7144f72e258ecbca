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

#ifndef AASBOUND_ENVELOPE_HPP
#define AASBOUND_ENVELOPE_HPP

#include <optional>
#include <string>

#include <Eigen/Core>

#include "aasbound/array_geometry.hpp"
#include "aasbound/pattern.hpp"
#include "aasbound/spectral.hpp"

namespace aasbound {

/// Conducted powers feeding the envelope formulas, dBm. An empty optional is
/// an absent quantity; formulas needing it throw.
struct RegimePowers {
  std::optional<double> p_e;        ///< signal power per element
  std::optional<double> p_im3;      ///< third-order distortion power per element
  std::optional<double> p_noise;    ///< noise power per branch
  std::optional<double> p_sub;      ///< signal power per sub-array and polarization
  std::optional<double> p_noise_s;  ///< noise power per sub-array and polarization
};

/// Values over a strictly increasing angle grid.
struct AngularCut {
  Eigen::VectorXd angles_deg;
  Eigen::VectorXd values_db;
  std::string label;

  void validate() const;
  Eigen::Index size() const { return angles_deg.size(); }
  /// Grid index closest to `angle_deg`.
  Eigen::Index nearest(double angle_deg) const;
  /// Index of the maximum; ties resolve toward 0 deg.
  Eigen::Index argmax() const;
};

struct UncertaintyMargins {
  double in_band_db = 1.3;
  double oob_db = 3.0;

  void validate() const;
  friend bool operator==(const UncertaintyMargins&, const UncertaintyMargins&) = default;
};

/// Uniform grid [first, last] with `step`; `last` is included when it falls on the grid.
Eigen::VectorXd angle_grid(double first_deg, double last_deg, double step_deg);

/// P_e + A_E(phi) + 20 log10 |AF(phi, dphi)|, floor at array nulls.
double eirp_signal(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                   const TwoElementArray<double>& array, double phi_deg, double delta_phi);

/// P_e + A_E(phi) + 20 log10(2).
AngularCut envelope_signal(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                           const Eigen::VectorXd& angles_deg);

/// P_IM3 + A_E(phi) + 20 log10(2): distortion shares the signal's array factor.
AngularCut envelope_im3(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                        const Eigen::VectorXd& angles_deg);

/// P_noise + A_E(phi) + 10 log10(2). No phase argument: the level does not depend on it.
double eirp_noise_two_element(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                              double phi_deg);

/// P_noise + A_E(phi) for a lone branch.
double eirp_noise_single_branch(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                                double phi_deg);

/// P_noise,s + A_sub(phi) + 10 log10(P M N), P the polarization count.
AngularCut envelope_noise_aas(const RegimePowers& powers, const ElementPatternParams<double>& sub_pattern,
                              const ArrayGeometry<double>& geometry, const Eigen::VectorXd& angles_deg);

/// P_sub + 10 log10(P) + A_sub(phi) + 20 log10(M N).
AngularCut envelope_coherent_aas(const RegimePowers& powers, const ElementPatternParams<double>& sub_pattern,
                                 const ArrayGeometry<double>& geometry, const Eigen::VectorXd& angles_deg);

/// Directional coherent EIRP of the AAS for a given steering, using af_aas.
double eirp_aas(const RegimePowers& powers, const ElementPatternParams<double>& sub_pattern,
                const ArrayGeometry<double>& geometry, const SteeringConfig<double>& steering, double theta_deg,
                double phi_deg);

double coherent_offset_db(const ArrayGeometry<double>& geometry);
double incoherent_offset_db(const ArrayGeometry<double>& geometry);

struct ImDirection {
  double angle_deg = 0.0;  ///< meaningful only when visible
  double sine = 0.0;       ///< 2 sin(phi_k) - sin(phi_l), may exceed 1 in magnitude
  bool visible = false;
};

struct MuImDirections {
  ImDirection b1;  ///< driven by 2 dphi_1 - dphi_2
  ImDirection b2;  ///< driven by 2 dphi_2 - dphi_1
};

/// Directions of the two Type-B products for users at phi1 and phi2.
MuImDirections mu_im_directions(double phi1_deg, double phi2_deg);

struct BoundReport {
  double worst_margin_db = 0.0;  ///< max over phi of cut - envelope
  double worst_angle_deg = 0.0;
  double slack_db = 0.0;
  bool pass = false;

  std::string to_json() const;
};

/// Checks cut(phi) <= envelope(phi) + slack on a shared grid. `worst_margin_db`
/// is max over phi of cut - envelope (negative when the cut stays below).
BoundReport check_mu_bound(const AngularCut& mu_cut, const AngularCut& su_envelope, double slack_db);

/// Adds the in-band margin to signal-dominated cuts and the out-of-band margin otherwise.
AngularCut apply_margins(const AngularCut& cut, const UncertaintyMargins& margins, SpectralRegion region);

/// Subtracts the value at (or nearest to) 0 deg of `reference`.
AngularCut normalize_to_boresight(const AngularCut& cut, const AngularCut& reference);

}  // namespace aasbound

#endif  // AASBOUND_ENVELOPE_HPP
