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

#ifndef AASBOUND_ORACLE_HPP
#define AASBOUND_ORACLE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "aasbound/array_geometry.hpp"
#include "aasbound/envelope.hpp"
#include "aasbound/pattern.hpp"
#include "aasbound/spectral.hpp"
#include "aasbound/waveform.hpp"

namespace aasbound {

using ArrayVariant = std::variant<TwoElementArray<double>, ArrayGeometry<double>>;

struct BeamUser {
  double power_dbm = 0.0;
  double steer_deg = 0.0;

  friend bool operator==(const BeamUser&, const BeamUser&) = default;
};

inline constexpr std::uint64_t kDefaultSampleBudget = std::uint64_t{1} << 31;

/// Everything the waveform-level far-field simulation needs.
struct FarFieldScenario {
  ArrayVariant geometry = TwoElementArray<double>{};
  ElementPatternParams<double> pattern{};
  PaModel pa{};
  double bandwidth_hz = 20e6;
  double sample_rate_hz = 128e6;
  Eigen::Index num_samples = Eigen::Index{1} << 16;
  std::vector<BeamUser> users{BeamUser{}};
  double theta_deg = 90.0;
  Eigen::VectorXd angles_deg = angle_grid(-60.0, 60.0, 1.0);
  int phase_steps = 128;
  double rbw_hz = 100e3;
  std::vector<BandDefinition> bands;
  std::uint64_t seed = 1;
  std::uint64_t budget_samples = kDefaultSampleBudget;

  void validate() const;

  int rows() const;
  int cols() const;
  int polarizations() const;
  int branch_count() const { return rows() * cols() * polarizations(); }
  bool is_two_element() const { return std::holds_alternative<TwoElementArray<double>>(geometry); }
};

inline constexpr int kMinPhaseSteps = 32;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Far-field samples the sweep (or a fixed-steering cut) would process:
/// angles x phase steps x samples x polarizations.
std::uint64_t processed_samples(const FarFieldScenario& scenario, bool sweep);

/// Per-user excitation gradients.
using Excitation = std::vector<SteeringConfig<double>>;

/// Each user steered toward its own direction in the theta cut.
Excitation steer_users(const FarFieldScenario& scenario);

/// All users share the horizontal gradient `delta_phi`, rows co-phased for the cut.
Excitation uniform_excitation(const FarFieldScenario& scenario, double delta_phi);

std::vector<UserSignal> generate_users(const FarFieldScenario& scenario);

/// PA output of every RF chain; column (p * rows + m) * cols + n holds the
/// branch of polarization p, row m, column n.
struct BranchOutputs {
  Eigen::MatrixXcd samples;
  int rows = 1;
  int cols = 1;
  int polarizations = 1;

  Eigen::Index column(int p, int m, int n) const { return (static_cast<Eigen::Index>(p) * rows + m) * cols + n; }
};

/// Applies excitation phases to the users and drives each branch PA. Branch
/// noise is drawn once per branch from (seed, branch, PaNoise) and reused for
/// every excitation.
class BranchSimulator {
 public:
  explicit BranchSimulator(const FarFieldScenario& scenario);
  BranchSimulator(const FarFieldScenario& scenario, std::vector<UserSignal> users);

  BranchOutputs simulate(const Excitation& excitation) const;
  const std::vector<UserSignal>& users() const { return users_; }

 private:
  const FarFieldScenario* scenario_;
  std::vector<UserSignal> users_;
  std::vector<Signal> noise_;
};

/// Far field of one polarization toward phi in the scenario's theta cut: the
/// sum of the branch outputs, each with its geometric phase, times the
/// radiator field 10^(A_E(phi)/20). Plane wave, narrowband, no path loss.
Signal radiate(const FarFieldScenario& scenario, const BranchOutputs& branches, double phi_deg,
               int polarization = 0);

/// Convenience overload that generates the users and branch outputs first.
Signal radiate(const FarFieldScenario& scenario, const Excitation& excitation, double phi_deg,
               int polarization = 0);

/// Radiator for repeated evaluation over one theta cut; rows are pre-summed
/// with their (angle-independent) vertical phase.
class CutRadiator {
 public:
  CutRadiator(const FarFieldScenario& scenario, const BranchOutputs& branches);
  Signal radiate(double phi_deg, int polarization) const;
  int polarizations() const { return polarizations_; }

 private:
  const FarFieldScenario* scenario_;
  Eigen::MatrixXcd columns_;  ///< samples x (polarizations * cols)
  int cols_;
  int polarizations_;
};

/// Integrated band powers (dBm) of every band over the angle grid, per phase step.
struct SweepResult {
  Eigen::VectorXd angles_deg;
  Eigen::VectorXd phases_rad;
  std::vector<std::string> band_labels;
  std::vector<Eigen::MatrixXd> band_dbm;  ///< [band](angle, phase)
  std::uint64_t seed = 0;

  Eigen::VectorXd max_over_sweep(std::size_t band) const;
  Eigen::VectorXd min_over_sweep(std::size_t band) const;
  AngularCut max_cut(std::size_t band) const;
  std::size_t band_index(const std::string& label) const;
};

/// Sweeps the horizontal excitation phase over [0, 2 pi) in `phase_steps`
/// steps for a single user and integrates every band at every angle.
SweepResult sweep_envelope(const FarFieldScenario& scenario);

/// Band-integrated cuts for a fixed steering of every user toward its target.
std::vector<AngularCut> steered_cuts(const FarFieldScenario& scenario);

/// steered_cuts restricted to exactly two users.
std::vector<AngularCut> mu_cut(const FarFieldScenario& scenario);

/// Conducted band powers of the reference branch with every user at zero phase.
struct ConductedPowers {
  std::vector<double> coherent_dbm;  ///< noiseless PA output
  std::vector<double> noise_dbm;     ///< additive branch noise
  std::vector<double> total_dbm;
};

ConductedPowers conducted_band_powers(const FarFieldScenario& scenario);

}  // namespace aasbound

#endif  // AASBOUND_ORACLE_HPP
