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

#ifndef AASBOUND_SPECTRAL_HPP
#define AASBOUND_SPECTRAL_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace aasbound {

/// Power per frequency bin, bins centred on `bin_freqs_hz` (relative to the
/// carrier, ascending from -fs/2) and `rbw_hz` wide.
struct Spectrum {
  Eigen::VectorXd bin_freqs_hz;
  Eigen::VectorXd psd_dbm;  ///< dBm per rbw, floor sentinel for empty bins
  double rbw_hz = 0.0;
  double sample_rate_hz = 0.0;

  Eigen::Index bins() const { return psd_dbm.size(); }
  Eigen::VectorXd linear_mw() const;
};

struct BandDefinition {
  double f_low_hz = 0.0;
  double f_high_hz = 0.0;
  std::string label;

  void validate() const;
  friend bool operator==(const BandDefinition&, const BandDefinition&) = default;
};

enum class SpectralRegion { SignalDominated, Im3Dominated, NoiseDominated };

std::string to_string(SpectralRegion region);
SpectralRegion region_from_string(const std::string& name);

/// Averaged periodogram: Hann-windowed segments of round(fs / rbw) samples with
/// 50 % overlap, normalized so the bins sum to the mean power.
class WelchEstimator {
 public:
  WelchEstimator(double sample_rate_hz, double rbw_hz);
  ~WelchEstimator();
  WelchEstimator(WelchEstimator&&) noexcept;
  WelchEstimator& operator=(WelchEstimator&&) noexcept;

  Eigen::Index segment_length() const { return segment_length_; }
  double bin_width_hz() const { return sample_rate_hz_ / static_cast<double>(segment_length_); }
  Eigen::Index segment_count(Eigen::Index num_samples) const;

  /// Linear mW per bin, ordered like Spectrum::bin_freqs_hz.
  Eigen::VectorXd linear_bins(const Eigen::Ref<const Eigen::VectorXcd>& samples);
  Spectrum estimate(const Eigen::Ref<const Eigen::VectorXcd>& samples);
  Eigen::VectorXd bin_freqs() const;

  /// Overlap weight of every bin with a band, circular across +-fs/2.
  Eigen::VectorXd band_weights(const BandDefinition& band) const;

 private:
  struct Impl;
  double sample_rate_hz_;
  Eigen::Index segment_length_;
  std::unique_ptr<Impl> impl_;
};

Spectrum estimate_psd(const Eigen::Ref<const Eigen::VectorXcd>& samples, double sample_rate_hz, double rbw_hz);

/// Band power in dBm. A bin contributes the fraction of its width inside the band.
double integrate_band(const Spectrum& spectrum, const BandDefinition& band);

/// Coarser spectrum obtained by integrating this one over bins of `new_rbw_hz`.
Spectrum rebin(const Spectrum& spectrum, double new_rbw_hz);

/// Dominant component per bin; ties resolve signal, then IM3, then noise.
std::vector<SpectralRegion> classify_regions(const Spectrum& signal_psd, const Spectrum& im3_psd,
                                             const Spectrum& noise_psd);

}  // namespace aasbound

#endif  // AASBOUND_SPECTRAL_HPP
