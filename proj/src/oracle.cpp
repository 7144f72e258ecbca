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

#include "aasbound/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "aasbound/units.hpp"

namespace aasbound {
namespace {

double row_step(const FarFieldScenario& s) {
  if (const auto* aas = std::get_if<ArrayGeometry<double>>(&s.geometry)) {
    return 2.0 * kPi<double> * aas->vertical_spacing_wavelengths * std::cos(deg_to_rad(s.theta_deg));
  }
  return 0.0;
}

double column_step(const FarFieldScenario& s, double phi_deg) {
  const double sin_phi = std::sin(deg_to_rad(phi_deg));
  if (const auto* aas = std::get_if<ArrayGeometry<double>>(&s.geometry)) {
    return 2.0 * kPi<double> * aas->horizontal_spacing_wavelengths * std::sin(deg_to_rad(s.theta_deg)) * sin_phi;
  }
  return 2.0 * kPi<double> * std::get<TwoElementArray<double>>(s.geometry).spacing_wavelengths * sin_phi;
}

void check_budget(const FarFieldScenario& s, bool sweep) {
  const std::uint64_t needed = processed_samples(s, sweep);
  if (needed > s.budget_samples) {
    throw BudgetExceeded("scenario needs " + std::to_string(needed) + " far-field samples, budget is " +
                         std::to_string(s.budget_samples));
  }
}

Eigen::MatrixXd band_weight_matrix(const FarFieldScenario& s, const WelchEstimator& welch) {
  Eigen::MatrixXd w(welch.segment_length(), static_cast<Eigen::Index>(s.bands.size()));
  for (std::size_t b = 0; b < s.bands.size(); ++b) w.col(static_cast<Eigen::Index>(b)) = welch.band_weights(s.bands[b]);
  return w;
}

// Linear band powers at one angle, summed over polarizations.
Eigen::VectorXd band_powers_at(const CutRadiator& radiator, WelchEstimator& welch, const Eigen::MatrixXd& weights,
                               double phi_deg) {
  Eigen::VectorXd total = Eigen::VectorXd::Zero(weights.cols());
  for (int p = 0; p < radiator.polarizations(); ++p) {
    total.noalias() += weights.transpose() * welch.linear_bins(radiator.radiate(phi_deg, p));
  }
  return total;
}

}  // namespace

int FarFieldScenario::rows() const {
  if (const auto* aas = std::get_if<ArrayGeometry<double>>(&geometry)) return aas->rows;
  return 1;
}

int FarFieldScenario::cols() const {
  if (const auto* aas = std::get_if<ArrayGeometry<double>>(&geometry)) return aas->cols;
  return 2;
}

int FarFieldScenario::polarizations() const {
  if (const auto* aas = std::get_if<ArrayGeometry<double>>(&geometry)) return aas->polarizations;
  return 1;
}

void FarFieldScenario::validate() const {
  std::visit([](const auto& g) { g.validate(); }, geometry);
  pattern.validate();
  pa.validate();
  require_finite(bandwidth_hz, "bandwidth");
  require_finite(sample_rate_hz, "sample rate");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
  if (sample_rate_hz < 4.0 * bandwidth_hz) throw std::invalid_argument("sample rate must be at least 4x the bandwidth");
  if (num_samples < (Eigen::Index{1} << 12)) throw std::invalid_argument("at least 4096 samples are required");
  if (users.empty()) throw std::invalid_argument("scenario needs at least one user");
  for (const auto& u : users) {
    if (std::isnan(u.power_dbm) || u.power_dbm == std::numeric_limits<double>::infinity()) {
      throw std::domain_error("user power must be finite or -inf");
    }
    require_finite(u.steer_deg, "user direction");
    if (std::abs(u.steer_deg) > 90.0) throw std::invalid_argument("user directions must lie within [-90, 90] deg");
  }
  require_finite(theta_deg, "theta");
  if (theta_deg < 0.0 || theta_deg > 180.0) throw std::invalid_argument("theta must lie within [0, 180] deg");
  AngularCut{angles_deg, Eigen::VectorXd::Zero(angles_deg.size()), ""}.validate();
  if (phase_steps < kMinPhaseSteps) {
    throw std::invalid_argument("phase sweep needs at least " + std::to_string(kMinPhaseSteps) + " steps");
  }
  require_finite(rbw_hz, "rbw");
  if (!(rbw_hz > 0.0)) throw std::invalid_argument("rbw must be > 0");
  if (static_cast<double>(num_samples) < 2.0 * sample_rate_hz / rbw_hz) {
    throw std::invalid_argument("need at least 2 * fs / rbw samples for the requested rbw");
  }
  if (bands.empty()) throw std::invalid_argument("scenario needs at least one band");
  for (const auto& b : bands) {
    b.validate();
    if (b.f_low_hz < -0.5 * sample_rate_hz || b.f_high_hz > 0.5 * sample_rate_hz) {
      throw std::invalid_argument("band '" + b.label + "' lies outside +-fs/2");
    }
  }
  if (budget_samples == 0) throw std::invalid_argument("sample budget must be > 0");
}

std::uint64_t processed_samples(const FarFieldScenario& s, bool sweep) {
  return static_cast<std::uint64_t>(s.angles_deg.size()) * static_cast<std::uint64_t>(sweep ? s.phase_steps : 1) *
         static_cast<std::uint64_t>(s.num_samples) * static_cast<std::uint64_t>(s.polarizations());
}

Excitation steer_users(const FarFieldScenario& s) {
  Excitation out;
  out.reserve(s.users.size());
  for (const auto& u : s.users) {
    if (const auto* aas = std::get_if<ArrayGeometry<double>>(&s.geometry)) {
      out.push_back(compensate_steering(*aas, s.theta_deg, u.steer_deg));
    } else {
      const auto& pair = std::get<TwoElementArray<double>>(s.geometry);
      out.emplace_back(0.0, compensate_steering(pair, u.steer_deg));
    }
  }
  return out;
}

Excitation uniform_excitation(const FarFieldScenario& s, double delta_phi) {
  return Excitation(s.users.size(), SteeringConfig<double>(-row_step(s), delta_phi));
}

std::vector<UserSignal> generate_users(const FarFieldScenario& s) {
  std::vector<UserSignal> users;
  users.reserve(s.users.size());
  for (std::size_t k = 0; k < s.users.size(); ++k) {
    users.push_back(generate_user_signal(s.bandwidth_hz, s.sample_rate_hz, s.num_samples, s.users[k].power_dbm,
                                         derive_seed(s.seed, k, StreamRole::UserSignal)));
  }
  return users;
}

BranchSimulator::BranchSimulator(const FarFieldScenario& scenario)
    : BranchSimulator(scenario, generate_users(scenario)) {}

BranchSimulator::BranchSimulator(const FarFieldScenario& scenario, std::vector<UserSignal> users)
    : scenario_(&scenario), users_(std::move(users)) {
  if (users_.size() != scenario.users.size()) throw std::invalid_argument("one signal per scenario user is required");
  noise_.reserve(static_cast<std::size_t>(scenario.branch_count()));
  for (int b = 0; b < scenario.branch_count(); ++b) {
    noise_.push_back(pa_noise(scenario.pa, scenario.num_samples,
                              derive_seed(scenario.seed, static_cast<std::uint64_t>(b), StreamRole::PaNoise)));
  }
}

BranchOutputs BranchSimulator::simulate(const Excitation& excitation) const {
  const FarFieldScenario& s = *scenario_;
  if (excitation.size() != users_.size()) throw std::invalid_argument("one excitation per user is required");
  BranchOutputs out;
  out.rows = s.rows();
  out.cols = s.cols();
  out.polarizations = s.polarizations();
  out.samples.resize(s.num_samples, s.branch_count());
  std::vector<double> phases(users_.size());
  for (int m = 0; m < out.rows; ++m) {
    for (int n = 0; n < out.cols; ++n) {
      for (std::size_t k = 0; k < users_.size(); ++k) phases[k] = excitation[k].phase(m, n);
      const Signal coherent = pa_noiseless(s.pa.alpha, combine_users(users_, phases));
      for (int p = 0; p < out.polarizations; ++p) {
        const Eigen::Index c = out.column(p, m, n);
        out.samples.col(c) = coherent + noise_[static_cast<std::size_t>(c)];
      }
    }
  }
  return out;
}

Signal radiate(const FarFieldScenario& s, const BranchOutputs& branches, double phi_deg, int polarization) {
  if (polarization < 0 || polarization >= branches.polarizations) throw std::invalid_argument("no such polarization");
  const double rstep = row_step(s);
  const double cstep = column_step(s, phi_deg);
  Signal field = Signal::Zero(branches.samples.rows());
  for (int m = 0; m < branches.rows; ++m) {
    for (int n = 0; n < branches.cols; ++n) {
      field += std::polar(1.0, m * rstep + n * cstep) * branches.samples.col(branches.column(polarization, m, n));
    }
  }
  return field * element_field(s.pattern, phi_deg);
}

Signal radiate(const FarFieldScenario& s, const Excitation& excitation, double phi_deg, int polarization) {
  const BranchSimulator sim(s);
  return radiate(s, sim.simulate(excitation), phi_deg, polarization);
}

CutRadiator::CutRadiator(const FarFieldScenario& scenario, const BranchOutputs& branches)
    : scenario_(&scenario), cols_(branches.cols), polarizations_(branches.polarizations) {
  const double rstep = row_step(scenario);
  columns_ = Eigen::MatrixXcd::Zero(branches.samples.rows(), static_cast<Eigen::Index>(polarizations_) * cols_);
  for (int p = 0; p < polarizations_; ++p) {
    for (int n = 0; n < cols_; ++n) {
      auto dst = columns_.col(static_cast<Eigen::Index>(p) * cols_ + n);
      for (int m = 0; m < branches.rows; ++m) {
        dst += std::polar(1.0, m * rstep) * branches.samples.col(branches.column(p, m, n));
      }
    }
  }
}

Signal CutRadiator::radiate(double phi_deg, int polarization) const {
  const double cstep = column_step(*scenario_, phi_deg);
  const double field = element_field(scenario_->pattern, phi_deg);
  Eigen::VectorXcd weights(cols_);
  for (int n = 0; n < cols_; ++n) weights(n) = std::polar(field, n * cstep);
  return columns_.middleCols(static_cast<Eigen::Index>(polarization) * cols_, cols_) * weights;
}

Eigen::VectorXd SweepResult::max_over_sweep(std::size_t band) const { return band_dbm.at(band).rowwise().maxCoeff(); }

Eigen::VectorXd SweepResult::min_over_sweep(std::size_t band) const { return band_dbm.at(band).rowwise().minCoeff(); }

AngularCut SweepResult::max_cut(std::size_t band) const {
  return AngularCut{angles_deg, max_over_sweep(band), band_labels.at(band)};
}

std::size_t SweepResult::band_index(const std::string& label) const {
  for (std::size_t b = 0; b < band_labels.size(); ++b) {
    if (band_labels[b] == label) return b;
  }
  throw std::out_of_range("no band labelled '" + label + "'");
}

SweepResult sweep_envelope(const FarFieldScenario& s) {
  s.validate();
  if (s.users.size() != 1) throw std::invalid_argument("the phase sweep is defined for exactly one user");
  check_budget(s, true);

  SweepResult result;
  result.angles_deg = s.angles_deg;
  result.seed = s.seed;
  result.phases_rad.resize(s.phase_steps);
  for (int i = 0; i < s.phase_steps; ++i) result.phases_rad(i) = 2.0 * kPi<double> * i / s.phase_steps;
  for (const auto& b : s.bands) {
    result.band_labels.push_back(b.label);
    result.band_dbm.emplace_back(s.angles_deg.size(), s.phase_steps);
  }

  const BranchSimulator sim(s);
  WelchEstimator welch(s.sample_rate_hz, s.rbw_hz);
  const Eigen::MatrixXd weights = band_weight_matrix(s, welch);
  for (int i = 0; i < s.phase_steps; ++i) {
    const BranchOutputs outputs = sim.simulate(uniform_excitation(s, result.phases_rad(i)));
    const CutRadiator radiator(s, outputs);
    for (Eigen::Index j = 0; j < s.angles_deg.size(); ++j) {
      const Eigen::VectorXd powers = band_powers_at(radiator, welch, weights, s.angles_deg(j));
      for (std::size_t b = 0; b < s.bands.size(); ++b) {
        result.band_dbm[b](j, i) = linear_to_db(powers(static_cast<Eigen::Index>(b)));
      }
    }
  }
  return result;
}

std::vector<AngularCut> steered_cuts(const FarFieldScenario& s) {
  s.validate();
  check_budget(s, false);
  const BranchSimulator sim(s);
  const BranchOutputs outputs = sim.simulate(steer_users(s));
  const CutRadiator radiator(s, outputs);
  WelchEstimator welch(s.sample_rate_hz, s.rbw_hz);
  const Eigen::MatrixXd weights = band_weight_matrix(s, welch);

  std::vector<AngularCut> cuts;
  for (const auto& b : s.bands) cuts.push_back(AngularCut{s.angles_deg, Eigen::VectorXd(s.angles_deg.size()), b.label});
  for (Eigen::Index j = 0; j < s.angles_deg.size(); ++j) {
    const Eigen::VectorXd powers = band_powers_at(radiator, welch, weights, s.angles_deg(j));
    for (std::size_t b = 0; b < cuts.size(); ++b) cuts[b].values_db(j) = linear_to_db(powers(static_cast<Eigen::Index>(b)));
  }
  return cuts;
}

std::vector<AngularCut> mu_cut(const FarFieldScenario& s) {
  if (s.users.size() != 2) throw std::invalid_argument("the multi-user cut needs exactly two users");
  return steered_cuts(s);
}

ConductedPowers conducted_band_powers(const FarFieldScenario& s) {
  s.validate();
  const std::vector<UserSignal> users = generate_users(s);
  const std::vector<double> zero(users.size(), 0.0);
  const Signal coherent = pa_noiseless(s.pa.alpha, combine_users(users, zero));
  const Signal noise = pa_noise(s.pa, s.num_samples, derive_seed(s.seed, 0, StreamRole::PaNoise));

  WelchEstimator welch(s.sample_rate_hz, s.rbw_hz);
  const Eigen::MatrixXd weights = band_weight_matrix(s, welch);
  const Eigen::VectorXd coh = weights.transpose() * welch.linear_bins(coherent);
  const Eigen::VectorXd noi = weights.transpose() * welch.linear_bins(noise);
  const Eigen::VectorXd tot = weights.transpose() * welch.linear_bins(coherent + noise);

  ConductedPowers out;
  for (Eigen::Index b = 0; b < weights.cols(); ++b) {
    out.coherent_dbm.push_back(linear_to_db(coh(b)));
    out.noise_dbm.push_back(linear_to_db(noi(b)));
    out.total_dbm.push_back(linear_to_db(tot(b)));
  }
  return out;
}

}  // namespace aasbound
