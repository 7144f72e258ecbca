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

#include "aasbound/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "aasbound/units.hpp"

namespace aasbound {
namespace {

constexpr double kNullMagnitude = 1e-12;

double required(const std::optional<double>& value, const char* name) {
  if (!value) throw std::invalid_argument(std::string("regime power ") + name + " is absent");
  require_finite(*value, name);
  return *value;
}

AngularCut pattern_cut(double level_db, const ElementPatternParams<double>& pattern,
                       const Eigen::VectorXd& angles_deg, std::string label) {
  pattern.validate();
  AngularCut cut;
  cut.angles_deg = angles_deg;
  cut.values_db = (element_gain(pattern, angles_deg) + level_db).matrix();
  cut.label = std::move(label);
  cut.validate();
  return cut;
}

void require_same_grid(const AngularCut& a, const AngularCut& b) {
  if (a.size() != b.size() || a.angles_deg != b.angles_deg) {
    throw std::invalid_argument("angular cuts must share one angle grid");
  }
}

}  // namespace

void AngularCut::validate() const {
  if (angles_deg.size() != values_db.size()) throw std::invalid_argument("cut angles and values differ in length");
  if (angles_deg.size() == 0) throw std::invalid_argument("cut is empty");
  for (Eigen::Index i = 1; i < angles_deg.size(); ++i) {
    if (!(angles_deg(i) > angles_deg(i - 1))) throw std::invalid_argument("cut angles must be strictly increasing");
  }
}

Eigen::Index AngularCut::nearest(double angle_deg) const {
  Eigen::Index best = 0;
  (angles_deg.array() - angle_deg).abs().minCoeff(&best);
  return best;
}

Eigen::Index AngularCut::argmax() const {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values_db.size(); ++i) {
    const double v = values_db(i);
    const double b = values_db(best);
    if (v > b || (v == b && std::abs(angles_deg(i)) < std::abs(angles_deg(best)))) best = i;
  }
  return best;
}

void UncertaintyMargins::validate() const {
  require_finite(in_band_db, "in-band margin");
  require_finite(oob_db, "out-of-band margin");
  if (in_band_db < 0.0 || oob_db < 0.0) throw std::invalid_argument("uncertainty margins must be >= 0");
}

Eigen::VectorXd angle_grid(double first_deg, double last_deg, double step_deg) {
  require_finite(first_deg, "grid start");
  require_finite(last_deg, "grid end");
  require_finite(step_deg, "grid step");
  if (!(step_deg > 0.0) || !(last_deg >= first_deg)) throw std::invalid_argument("invalid angle grid");
  const auto count = static_cast<Eigen::Index>(std::floor((last_deg - first_deg) / step_deg + 1e-9)) + 1;
  Eigen::VectorXd grid(count);
  for (Eigen::Index i = 0; i < count; ++i) grid(i) = first_deg + static_cast<double>(i) * step_deg;
  return grid;
}

double eirp_signal(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                   const TwoElementArray<double>& array, double phi_deg, double delta_phi) {
  const double p_e = required(powers.p_e, "p_e");
  const double af = af2_magnitude(array, phi_deg, delta_phi);
  if (af < kNullMagnitude) return kFloorDb;
  return p_e + element_gain(pattern, phi_deg) + 20.0 * std::log10(af);
}

AngularCut envelope_signal(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                           const Eigen::VectorXd& angles_deg) {
  return pattern_cut(required(powers.p_e, "p_e") + kCoherentPairGainDb, pattern, angles_deg, "signal");
}

AngularCut envelope_im3(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                        const Eigen::VectorXd& angles_deg) {
  return pattern_cut(required(powers.p_im3, "p_im3") + kCoherentPairGainDb, pattern, angles_deg, "im3");
}

double eirp_noise_two_element(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                              double phi_deg) {
  return required(powers.p_noise, "p_noise") + element_gain(pattern, phi_deg) + kIncoherentPairGainDb;
}

double eirp_noise_single_branch(const RegimePowers& powers, const ElementPatternParams<double>& pattern,
                                double phi_deg) {
  return required(powers.p_noise, "p_noise") + element_gain(pattern, phi_deg);
}

double coherent_offset_db(const ArrayGeometry<double>& geometry) {
  geometry.validate();
  return 10.0 * std::log10(static_cast<double>(geometry.polarizations)) +
         20.0 * std::log10(static_cast<double>(geometry.elements_per_polarization()));
}

double incoherent_offset_db(const ArrayGeometry<double>& geometry) {
  geometry.validate();
  return 10.0 * std::log10(static_cast<double>(geometry.branch_count()));
}

AngularCut envelope_noise_aas(const RegimePowers& powers, const ElementPatternParams<double>& sub_pattern,
                              const ArrayGeometry<double>& geometry, const Eigen::VectorXd& angles_deg) {
  return pattern_cut(required(powers.p_noise_s, "p_noise_s") + incoherent_offset_db(geometry), sub_pattern,
                     angles_deg, "noise");
}

AngularCut envelope_coherent_aas(const RegimePowers& powers, const ElementPatternParams<double>& sub_pattern,
                                 const ArrayGeometry<double>& geometry, const Eigen::VectorXd& angles_deg) {
  return pattern_cut(required(powers.p_sub, "p_sub") + coherent_offset_db(geometry), sub_pattern, angles_deg,
                     "signal");
}

double eirp_aas(const RegimePowers& powers, const ElementPatternParams<double>& sub_pattern,
                const ArrayGeometry<double>& geometry, const SteeringConfig<double>& steering, double theta_deg,
                double phi_deg) {
  const double p_sub = required(powers.p_sub, "p_sub");
  const double af = std::abs(af_aas(geometry, steering, theta_deg, phi_deg));
  if (af < kNullMagnitude) return kFloorDb;
  return p_sub + 10.0 * std::log10(static_cast<double>(geometry.polarizations)) +
         element_gain(sub_pattern, phi_deg) + 20.0 * std::log10(af);
}

MuImDirections mu_im_directions(double phi1_deg, double phi2_deg) {
  require_finite(phi1_deg, "user direction");
  require_finite(phi2_deg, "user direction");
  if (std::abs(phi1_deg) > 90.0 || std::abs(phi2_deg) > 90.0) {
    throw std::domain_error("user directions must lie within [-90, 90] deg");
  }
  const double s1 = std::sin(deg_to_rad(phi1_deg));
  const double s2 = std::sin(deg_to_rad(phi2_deg));
  auto direction = [](double sine) {
    ImDirection d;
    d.sine = sine;
    d.visible = std::abs(sine) <= 1.0;
    if (d.visible) d.angle_deg = rad_to_deg(std::asin(sine));
    return d;
  };
  return {direction(2.0 * s1 - s2), direction(2.0 * s2 - s1)};
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["worst_margin_db"] = worst_margin_db;
  j["worst_angle_deg"] = worst_angle_deg;
  j["slack_db"] = slack_db;
  j["pass"] = pass;
  return j.dump(2);
}

BoundReport check_mu_bound(const AngularCut& mu_cut, const AngularCut& su_envelope, double slack_db) {
  mu_cut.validate();
  su_envelope.validate();
  require_same_grid(mu_cut, su_envelope);
  require_finite(slack_db, "slack");
  BoundReport report;
  report.slack_db = slack_db;
  Eigen::Index worst = 0;
  const Eigen::VectorXd margin = mu_cut.values_db - su_envelope.values_db;
  report.worst_margin_db = margin.maxCoeff(&worst);
  report.worst_angle_deg = mu_cut.angles_deg(worst);
  report.pass = report.worst_margin_db <= slack_db;
  return report;
}

AngularCut apply_margins(const AngularCut& cut, const UncertaintyMargins& margins, SpectralRegion region) {
  margins.validate();
  const double margin = region == SpectralRegion::SignalDominated ? margins.in_band_db : margins.oob_db;
  AngularCut out = cut;
  if (margin != 0.0) out.values_db.array() += margin;
  return out;
}

AngularCut normalize_to_boresight(const AngularCut& cut, const AngularCut& reference) {
  const double ref = reference.values_db(reference.nearest(0.0));
  AngularCut out = cut;
  out.values_db = cut.values_db.unaryExpr([ref](double v) { return is_floor(v) ? v : v - ref; });
  return out;
}

}  // namespace aasbound
