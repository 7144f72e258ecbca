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

#include <doctest.h>

#include <cmath>

#include "aasbound/spectral.hpp"
#include "aasbound/units.hpp"
#include "aasbound/waveform.hpp"
#include "support/oracles.hpp"

using namespace aasbound;

namespace {

Signal to_signal(const std::vector<std::complex<double>>& v) {
  Signal s(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) s(static_cast<Eigen::Index>(i)) = v[i];
  return s;
}

double time_power_dbm(const Signal& x) { return 10.0 * std::log10(x.squaredNorm() / static_cast<double>(x.size())); }

BandDefinition full_span(double fs) { return {-0.5 * fs, 0.5 * fs, "full"}; }

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("Welch bins agree with a direct DFT periodogram") {
  oracle::Gen gen(41);
  const auto x = gen.gaussian_vector(1000, 2.0);
  WelchEstimator welch(1.0, 1.0 / 32.0);
  REQUIRE(welch.segment_length() == 32);
  CHECK(welch.segment_count(1000) == 61);
  const Eigen::VectorXd bins = welch.linear_bins(to_signal(x));
  const std::vector<double> ref = oracle::direct_welch(x, 32);
  for (int k = 0; k < 32; ++k) CHECK(bins(k) == doctest::Approx(ref[k]).epsilon(1e-10));
}

TEST_CASE("bin grid is centred and ascending from -fs/2") {
  const Spectrum s = estimate_psd(Signal::Ones(4096), 128e6, 1e6);
  REQUIRE(s.bins() == 128);
  CHECK(s.bin_freqs_hz(0) == -64e6);
  CHECK(s.bin_freqs_hz(64) == 0.0);
  CHECK(s.bin_freqs_hz(127) == 63e6);
  CHECK(s.rbw_hz == 1e6);
}

TEST_CASE("tone lands in one dominant bin with its power") {
  const double fs = 128e6;
  const double f0 = 17e6;
  const double p_dbm = 7.0;
  Signal x(1 << 14);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = std::polar(std::sqrt(db_to_linear(p_dbm)), 2.0 * oracle::pi * f0 / fs * i);
  const Spectrum s = estimate_psd(x, fs, 1e6);
  Eigen::Index k = 0;
  s.psd_dbm.maxCoeff(&k);
  CHECK(s.bin_freqs_hz(k) == f0);
  CHECK(std::abs(integrate_band(s, {f0 - 3e6, f0 + 3e6, "tone"}) - p_dbm) < 0.1);
}

TEST_CASE("white noise is flat and integrates to its power") {
  oracle::Gen gen(42);
  const Signal x = to_signal(gen.gaussian_vector(1 << 16, 0.5));
  const Spectrum s = estimate_psd(x, 64e6, 1e6);
  const double expect = 10.0 * std::log10(0.5 / 64.0);
  for (Eigen::Index k = 0; k < s.bins(); ++k) CHECK(std::abs(s.psd_dbm(k) - expect) < 0.5);
  CHECK(std::abs(integrate_band(s, full_span(64e6)) - time_power_dbm(x)) < 0.2);
}

TEST_CASE("silence maps to the floor sentinel") {
  const Spectrum s = estimate_psd(Signal::Zero(8192), 16e6, 1e6);
  CHECK((s.psd_dbm.array() == kFloorDb).all());
  CHECK(integrate_band(s, full_span(16e6)) == kFloorDb);
}

TEST_CASE("insufficient samples and bad bands are rejected") {
  CHECK_THROWS(estimate_psd(Signal::Ones(200), 128e6, 1e6));
  const Spectrum s = estimate_psd(Signal::Ones(4096), 128e6, 1e6);
  CHECK_THROWS_AS(integrate_band(s, {50e6, 70e6, "beyond"}), std::out_of_range);
  CHECK_THROWS(integrate_band(s, {5e6, 5e6, "empty"}));
  CHECK_THROWS(BandDefinition{2.0, 1.0, "reversed"}.validate());
}

TEST_CASE("property: Parseval and additivity for random spectra") {
  oracle::Gen gen(43);
  for (int trial = 0; trial < 20; ++trial) {
    const double fs = gen.uniform(10e6, 200e6);
    const double rbw = fs / gen.integer(16, 256);
    const auto n = static_cast<std::size_t>(gen.integer(8, 24)) * static_cast<std::size_t>(std::llround(fs / rbw)) * 2;
    std::vector<std::complex<double>> v = gen.gaussian_vector(n, gen.uniform(0.01, 10.0));
    const double f0 = gen.uniform(-0.4, 0.4);
    for (std::size_t i = 0; i < n; ++i) v[i] += std::polar(gen.uniform(0.5, 1.5), 2.0 * oracle::pi * f0 * static_cast<double>(i));
    const Signal x = to_signal(v);
    const Spectrum s = estimate_psd(x, fs, rbw);
    const double full = integrate_band(s, full_span(fs));
    CHECK(std::abs(full - time_power_dbm(x)) < 0.2);

    const double cut = gen.uniform(-0.45, 0.45) * fs;
    const double lo = db_to_linear(integrate_band(s, {-0.5 * fs, cut, "lo"}));
    const double hi = db_to_linear(integrate_band(s, {cut, 0.5 * fs, "hi"}));
    CHECK(lo + hi == doctest::Approx(db_to_linear(full)).epsilon(1e-9));
  }
}

TEST_CASE("filtered linear signal: adjacent band at least 50 dB down") {
  const UserSignal u = generate_user_signal(20e6, 128e6, 1 << 16, 0.0, 3);
  const Spectrum s = estimate_psd(u.samples, 128e6, 100e3);
  const double in = integrate_band(s, {-10e6, 10e6, "in"});
  CHECK(in - integrate_band(s, {10e6, 30e6, "adj-high"}) >= 50.0);
  CHECK(in - integrate_band(s, {-30e6, -10e6, "adj-low"}) >= 50.0);
}

TEST_CASE("rebinning 100 kHz to 1 MHz matches a direct 1 MHz estimate") {
  oracle::Gen gen(44);
  const Signal x = to_signal(gen.gaussian_vector(1 << 20, 1.0));
  const Spectrum fine = estimate_psd(x, 128e6, 100e3);
  const Spectrum coarse = estimate_psd(x, 128e6, 1e6);
  const Spectrum rebinned = rebin(fine, 1e6);
  REQUIRE(rebinned.bins() == coarse.bins());
  CHECK(rebinned.bin_freqs_hz == coarse.bin_freqs_hz);
  for (Eigen::Index k = 0; k < coarse.bins(); ++k) CHECK(std::abs(rebinned.psd_dbm(k) - coarse.psd_dbm(k)) < 0.3);
  CHECK_THROWS(rebin(coarse, 100e3));
  CHECK_THROWS(rebin(fine, 3e6));
}

TEST_CASE("region classification follows component dominance") {
  const double fs = 128e6;
  const UserSignal u = generate_user_signal(20e6, fs, 1 << 16, 0.0, 4);
  const Signal im3 = pa_noiseless({-0.05, 0.0}, u.samples) - u.samples;
  const PaModel pa{{0.0, 0.0}, -60.0};
  const Signal noise = pa_noise(pa, u.samples.size(), 99);
  const Spectrum ps = estimate_psd(u.samples, fs, 1e6);
  const Spectrum pi = estimate_psd(im3, fs, 1e6);
  const Spectrum pn = estimate_psd(noise, fs, 1e6);
  const auto regions = classify_regions(ps, pi, pn);
  for (Eigen::Index k = 0; k < ps.bins(); ++k) {
    const double f = std::abs(ps.bin_freqs_hz(k));
    const auto r = regions[static_cast<std::size_t>(k)];
    if (f <= 6e6) CHECK(r == SpectralRegion::SignalDominated);
    if (f >= 14e6 && f <= 24e6) CHECK(r == SpectralRegion::Im3Dominated);
    if (f >= 36e6) CHECK(r == SpectralRegion::NoiseDominated);
  }

  const Spectrum other = estimate_psd(noise, fs, 2e6);
  CHECK_THROWS(classify_regions(ps, pi, other));
}

TEST_CASE("classification ties resolve signal, then IM3, then noise") {
  Spectrum a = estimate_psd(Signal::Ones(4096), 16e6, 1e6);
  a.psd_dbm.setConstant(-10.0);
  Spectrum b = a;
  Spectrum c = a;
  CHECK(classify_regions(a, b, c).front() == SpectralRegion::SignalDominated);
  a.psd_dbm.setConstant(-20.0);
  CHECK(classify_regions(a, b, c).front() == SpectralRegion::Im3Dominated);
  b.psd_dbm.setConstant(-30.0);
  CHECK(classify_regions(a, b, c).front() == SpectralRegion::NoiseDominated);
}

TEST_CASE("component additivity per bin") {
  const double fs = 128e6;
  const UserSignal u = generate_user_signal(20e6, fs, 1 << 16, 0.0, 5);
  const Signal im3 = pa_noiseless({-0.05, 0.0}, u.samples) - u.samples;
  const Signal noise = pa_noise(PaModel{{0.0, 0.0}, -40.0}, u.samples.size(), 6);
  const Eigen::VectorXd total = estimate_psd(u.samples + im3 + noise, fs, 1e6).linear_mw();
  const Eigen::VectorXd sum = estimate_psd(u.samples, fs, 1e6).linear_mw() + estimate_psd(im3, fs, 1e6).linear_mw() +
                              estimate_psd(noise, fs, 1e6).linear_mw();
  for (Eigen::Index k = 0; k < total.size(); ++k) CHECK(linear_to_db(total(k)) <= linear_to_db(sum(k)) + 0.5);
}

TEST_CASE("region names") {
  for (auto r : {SpectralRegion::SignalDominated, SpectralRegion::Im3Dominated, SpectralRegion::NoiseDominated}) {
    CHECK(region_from_string(to_string(r)) == r);
  }
  CHECK(to_string(SpectralRegion::Im3Dominated) == "im3");
  CHECK_THROWS(region_from_string("thermal"));
}

}
