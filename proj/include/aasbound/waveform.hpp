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

#ifndef AASBOUND_WAVEFORM_HPP
#define AASBOUND_WAVEFORM_HPP

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>

#include <Eigen/Core>

namespace aasbound {

using Signal = Eigen::VectorXcd;

/// Memoryless third-order PA, y = x + alpha |x|^2 x + w.
struct PaModel {
  std::complex<double> alpha{-0.05, 0.0};
  double noise_power_dbm = -40.0;  ///< per branch, over the full sample rate; -inf disables noise

  void validate() const;
  friend bool operator==(const PaModel&, const PaModel&) = default;
};

/// Band-limited circularly-symmetric complex Gaussian stream. `power_dbm` is the
/// mean of |x|^2 expressed in dBm (1 mW per unit squared magnitude).
struct UserSignal {
  Signal samples;
  double sample_rate_hz = 0.0;
  double center_offset_hz = 0.0;
  double power_dbm = 0.0;
  std::uint64_t seed = 0;
};

/// Purpose of an RNG stream; part of the seed derivation.
enum class StreamRole : std::uint32_t { UserSignal = 1, PaNoise = 2 };

/// Seed of the stream used by (`index`, `role`) under a master seed. Results are
/// independent of the order in which streams are drawn.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, StreamRole role);

inline constexpr int kLowpassTaps = 257;
inline constexpr double kLowpassKaiserBeta = 8.0;

/// Windowed-sinc lowpass (Kaiser, 257 taps, beta 8), unit DC gain. `cutoff` is
/// the -6 dB edge as a fraction of the sample rate.
Eigen::VectorXd design_lowpass(double cutoff, int taps = kLowpassTaps, double beta = kLowpassKaiserBeta);

/// Transition width of the lowpass above as a fraction of the sample rate.
double lowpass_transition_width(int taps = kLowpassTaps, double beta = kLowpassKaiserBeta);

/// Surrogate for a wideband OFDM carrier: white complex Gaussian filtered so
/// that the stopband starts at +-bandwidth/2, then scaled to `power_dbm`.
UserSignal generate_user_signal(double bandwidth_hz, double sample_rate_hz, Eigen::Index num_samples,
                                double power_dbm, std::uint64_t seed);

/// x + alpha |x|^2 x.
Signal pa_noiseless(std::complex<double> alpha, const Eigen::Ref<const Signal>& x);

/// Additive branch noise of the PA; zero when noise is disabled.
Signal pa_noise(const PaModel& pa, Eigen::Index num_samples, std::uint64_t seed);

Signal pa_output(const PaModel& pa, const Eigen::Ref<const Signal>& branch_input, std::uint64_t seed);

/// Per-branch, per-user excitation phases (radians). Rows are branches,
/// columns users; row 0 is the reference branch and stays at zero.
class BranchAssignment {
 public:
  explicit BranchAssignment(Eigen::MatrixXd phases);

  /// Two-branch assignment with second-branch phases `second_branch`.
  static BranchAssignment two_branch(std::span<const double> second_branch);

  Eigen::Index branches() const { return phases_.rows(); }
  Eigen::Index users() const { return phases_.cols(); }
  double phase(Eigen::Index branch, Eigen::Index user) const { return phases_(branch, user); }
  const Eigen::MatrixXd& phases() const { return phases_; }

 private:
  Eigen::MatrixXd phases_;
};

/// sum_k u_k exp(j phase_k).
Signal combine_users(std::span<const UserSignal> users, std::span<const double> phases);

/// PA output of one branch split into the algebraic pieces of the two-user cubic.
struct Im3Decomposition {
  Signal linear;
  Signal self_distortion;
  Signal cross_a;
  Signal cross_b;
  Signal noise;

  Signal distortion() const { return self_distortion + cross_a + cross_b; }
  Signal reconstruct(std::complex<double> alpha) const { return linear + alpha * distortion() + noise; }
};

/// Decomposition of branch `branch` (1 or 2) of a two-branch, two-user
/// transmitter. Branch 1 uses unit phases; branch 2 the assignment phases.
/// `noise_seed` selects the same noise realization `pa_output` would draw.
Im3Decomposition decompose_two_user(const PaModel& pa, const UserSignal& u1, const UserSignal& u2,
                                    const BranchAssignment& phases, int branch, std::uint64_t noise_seed);

/// Binary interleaved float64 I/Q preceded by a short text header.
void write_iq(const std::filesystem::path& path, const UserSignal& signal);
UserSignal read_iq(const std::filesystem::path& path);

}  // namespace aasbound

#endif  // AASBOUND_WAVEFORM_HPP
