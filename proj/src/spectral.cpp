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

#include "aasbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "aasbound/units.hpp"

namespace aasbound {
namespace {

double overlap(double a_low, double a_high, double b_low, double b_high) {
  return std::max(0.0, std::min(a_high, b_high) - std::max(a_low, b_low));
}

// Circular overlap of every bin with [low, high], as a fraction of the bin width.
Eigen::VectorXd bin_weights(const Eigen::VectorXd& freqs, double rbw, double fs, double low, double high) {
  Eigen::VectorXd w(freqs.size());
  for (Eigen::Index k = 0; k < freqs.size(); ++k) {
    const double lo = freqs(k) - 0.5 * rbw;
    const double hi = freqs(k) + 0.5 * rbw;
    const double covered =
        overlap(lo, hi, low, high) + overlap(lo + fs, hi + fs, low, high) + overlap(lo - fs, hi - fs, low, high);
    w(k) = covered / rbw;
  }
  return w;
}

Eigen::VectorXd centred_freqs(Eigen::Index bins, double fs) {
  const double width = fs / static_cast<double>(bins);
  Eigen::VectorXd f(bins);
  for (Eigen::Index k = 0; k < bins; ++k) f(k) = static_cast<double>(k - bins / 2) * width;
  return f;
}

void require_band_in_span(const BandDefinition& band, double fs) {
  const double edge = 0.5 * fs * (1.0 + 1e-12);
  if (band.f_low_hz < -edge || band.f_high_hz > edge) {
    throw std::out_of_range("band '" + band.label + "' lies outside the spectrum span");
  }
}

bool same_grid(const Spectrum& a, const Spectrum& b) {
  return a.bins() == b.bins() && a.rbw_hz == b.rbw_hz && a.bin_freqs_hz == b.bin_freqs_hz;
}

}  // namespace

Eigen::VectorXd Spectrum::linear_mw() const {
  return psd_dbm.unaryExpr([](double db) { return db_to_linear(db); });
}

void BandDefinition::validate() const {
  require_finite(f_low_hz, "band edge");
  require_finite(f_high_hz, "band edge");
  if (!(f_low_hz < f_high_hz)) throw std::invalid_argument("band '" + label + "' needs f_low < f_high");
}

std::string to_string(SpectralRegion region) {
  switch (region) {
    case SpectralRegion::SignalDominated: return "signal";
    case SpectralRegion::Im3Dominated: return "im3";
    case SpectralRegion::NoiseDominated: return "noise";
  }
  return "unknown";
}

SpectralRegion region_from_string(const std::string& name) {
  if (name == "signal") return SpectralRegion::SignalDominated;
  if (name == "im3") return SpectralRegion::Im3Dominated;
  if (name == "noise") return SpectralRegion::NoiseDominated;
  throw std::invalid_argument("unknown spectral region '" + name + "' (expected signal, im3 or noise)");
}

struct WelchEstimator::Impl {
  Eigen::FFT<double> fft;
  Eigen::VectorXd window;
  double window_energy = 0.0;
  Eigen::VectorXcd segment;
  Eigen::VectorXcd spectrum;
  Eigen::VectorXd accum;
};

WelchEstimator::WelchEstimator(double sample_rate_hz, double rbw_hz)
    : sample_rate_hz_(sample_rate_hz), impl_(std::make_unique<Impl>()) {
  require_finite(sample_rate_hz, "sample rate");
  require_finite(rbw_hz, "rbw");
  if (!(sample_rate_hz > 0.0) || !(rbw_hz > 0.0)) throw std::invalid_argument("sample rate and rbw must be > 0");
  segment_length_ = static_cast<Eigen::Index>(std::llround(sample_rate_hz / rbw_hz));
  if (segment_length_ < 2) throw std::invalid_argument("rbw too coarse for the sample rate");

  const Eigen::Index n = segment_length_;
  impl_->window.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    impl_->window(i) = 0.5 - 0.5 * std::cos(2.0 * kPi<double> * static_cast<double>(i) / static_cast<double>(n));
  }
  impl_->window_energy = impl_->window.squaredNorm();
  impl_->segment.resize(n);
  impl_->spectrum.resize(n);
  impl_->accum.resize(n);
}

WelchEstimator::~WelchEstimator() = default;
WelchEstimator::WelchEstimator(WelchEstimator&&) noexcept = default;
WelchEstimator& WelchEstimator::operator=(WelchEstimator&&) noexcept = default;

Eigen::Index WelchEstimator::segment_count(Eigen::Index num_samples) const {
  const Eigen::Index hop = segment_length_ / 2;
  if (num_samples < segment_length_) return 0;
  return (num_samples - segment_length_) / hop + 1;
}

Eigen::VectorXd WelchEstimator::bin_freqs() const { return centred_freqs(segment_length_, sample_rate_hz_); }

Eigen::VectorXd WelchEstimator::linear_bins(const Eigen::Ref<const Eigen::VectorXcd>& samples) {
  const Eigen::Index n = segment_length_;
  if (samples.size() < 2 * n) {
    throw std::invalid_argument("need at least 2 * fs / rbw samples for the requested rbw");
  }
  const Eigen::Index hop = n / 2;
  const Eigen::Index segments = segment_count(samples.size());
  Impl& s = *impl_;
  s.accum.setZero();
  for (Eigen::Index seg = 0; seg < segments; ++seg) {
    const Eigen::Index start = seg * hop;
    for (Eigen::Index i = 0; i < n; ++i) s.segment(i) = samples(start + i) * s.window(i);
    s.fft.fwd(s.spectrum, s.segment);
    s.accum += s.spectrum.cwiseAbs2();
  }
  const double scale = 1.0 / (static_cast<double>(segments) * static_cast<double>(n) * s.window_energy);
  Eigen::VectorXd bins(n);
  const Eigen::Index half = n / 2;
  for (Eigen::Index k = 0; k < n; ++k) bins(k) = s.accum((k - half + n) % n) * scale;
  return bins;
}

Spectrum WelchEstimator::estimate(const Eigen::Ref<const Eigen::VectorXcd>& samples) {
  Spectrum out;
  out.psd_dbm = linear_bins(samples).unaryExpr([](double p) { return linear_to_db(p); });
  out.bin_freqs_hz = bin_freqs();
  out.rbw_hz = bin_width_hz();
  out.sample_rate_hz = sample_rate_hz_;
  return out;
}

Eigen::VectorXd WelchEstimator::band_weights(const BandDefinition& band) const {
  band.validate();
  require_band_in_span(band, sample_rate_hz_);
  return bin_weights(bin_freqs(), bin_width_hz(), sample_rate_hz_, band.f_low_hz, band.f_high_hz);
}

Spectrum estimate_psd(const Eigen::Ref<const Eigen::VectorXcd>& samples, double sample_rate_hz, double rbw_hz) {
  if (!(rbw_hz * static_cast<double>(samples.size()) >= sample_rate_hz)) {
    throw std::invalid_argument("rbw finer than fs / num_samples");
  }
  WelchEstimator welch(sample_rate_hz, rbw_hz);
  return welch.estimate(samples);
}

double integrate_band(const Spectrum& spectrum, const BandDefinition& band) {
  band.validate();
  require_band_in_span(band, spectrum.sample_rate_hz);
  const Eigen::VectorXd w =
      bin_weights(spectrum.bin_freqs_hz, spectrum.rbw_hz, spectrum.sample_rate_hz, band.f_low_hz, band.f_high_hz);
  return linear_to_db(w.dot(spectrum.linear_mw()));
}

Spectrum rebin(const Spectrum& spectrum, double new_rbw_hz) {
  const double ratio = spectrum.sample_rate_hz / new_rbw_hz;
  const auto bins = static_cast<Eigen::Index>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(bins)) > 1e-9 * ratio || bins < 2) {
    throw std::invalid_argument("new rbw must divide the sample rate");
  }
  if (new_rbw_hz < spectrum.rbw_hz) throw std::invalid_argument("rebin only coarsens the resolution");

  Spectrum out;
  out.sample_rate_hz = spectrum.sample_rate_hz;
  out.rbw_hz = spectrum.sample_rate_hz / static_cast<double>(bins);
  out.bin_freqs_hz = centred_freqs(bins, spectrum.sample_rate_hz);
  out.psd_dbm.resize(bins);
  const Eigen::VectorXd lin = spectrum.linear_mw();
  for (Eigen::Index j = 0; j < bins; ++j) {
    const double lo = out.bin_freqs_hz(j) - 0.5 * out.rbw_hz;
    const double hi = out.bin_freqs_hz(j) + 0.5 * out.rbw_hz;
    const Eigen::VectorXd w =
        bin_weights(spectrum.bin_freqs_hz, spectrum.rbw_hz, spectrum.sample_rate_hz, lo, hi);
    out.psd_dbm(j) = linear_to_db(w.dot(lin));
  }
  return out;
}

std::vector<SpectralRegion> classify_regions(const Spectrum& signal_psd, const Spectrum& im3_psd,
                                             const Spectrum& noise_psd) {
  if (!same_grid(signal_psd, im3_psd) || !same_grid(signal_psd, noise_psd)) {
    throw std::invalid_argument("component spectra must share one bin grid");
  }
  std::vector<SpectralRegion> regions(static_cast<std::size_t>(signal_psd.bins()));
  for (Eigen::Index k = 0; k < signal_psd.bins(); ++k) {
    const double s = signal_psd.psd_dbm(k);
    const double i = im3_psd.psd_dbm(k);
    const double n = noise_psd.psd_dbm(k);
    SpectralRegion r = SpectralRegion::NoiseDominated;
    if (s >= i && s >= n) r = SpectralRegion::SignalDominated;
    else if (i >= n) r = SpectralRegion::Im3Dominated;
    regions[static_cast<std::size_t>(k)] = r;
  }
  return regions;
}

}  // namespace aasbound
