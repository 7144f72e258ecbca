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

#include "aasbound/waveform.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aasbound/io.hpp"
#include "aasbound/units.hpp"

namespace aasbound {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool noise_enabled(const PaModel& pa) { return std::isfinite(pa.noise_power_dbm) && pa.noise_power_dbm > kFloorDb; }

Signal complex_gaussian(Eigen::Index n, double variance, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  Signal out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    out(i) = {re, im};
  }
  return out;
}

}  // namespace

void PaModel::validate() const {
  require_finite(alpha.real(), "alpha");
  require_finite(alpha.imag(), "alpha");
  if (std::isnan(noise_power_dbm) || noise_power_dbm == std::numeric_limits<double>::infinity()) {
    throw std::domain_error("noise power must be finite or -inf");
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, StreamRole role) {
  const std::uint64_t tagged = (static_cast<std::uint64_t>(role) << 48) ^ index;
  return splitmix64(splitmix64(master) ^ splitmix64(tagged));
}

double lowpass_transition_width(int taps, double beta) {
  const double attenuation_db = 8.7 + beta / 0.1102;
  return (attenuation_db - 7.95) / (14.36 * (taps - 1));
}

Eigen::VectorXd design_lowpass(double cutoff, int taps, double beta) {
  if (taps < 3 || taps % 2 == 0) throw std::invalid_argument("lowpass needs an odd tap count >= 3");
  if (!(cutoff > 0.0 && cutoff < 0.5)) throw std::invalid_argument("lowpass cutoff must lie in (0, 0.5)");
  Eigen::VectorXd h(taps);
  const double centre = 0.5 * (taps - 1);
  const double norm = std::cyl_bessel_i(0.0, beta);
  for (int i = 0; i < taps; ++i) {
    const double t = i - centre;
    const double arg = 2.0 * cutoff * t;
    const double sinc = t == 0.0 ? 1.0 : std::sin(kPi<double> * arg) / (kPi<double> * arg);
    const double r = t / centre;
    const double window = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / norm;
    h(i) = 2.0 * cutoff * sinc * window;
  }
  return h / h.sum();
}

UserSignal generate_user_signal(double bandwidth_hz, double sample_rate_hz, Eigen::Index num_samples,
                                double power_dbm, std::uint64_t seed) {
  require_finite(bandwidth_hz, "bandwidth");
  require_finite(sample_rate_hz, "sample rate");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
  if (sample_rate_hz < 4.0 * bandwidth_hz) {
    throw std::invalid_argument("sample rate must be at least 4x the signal bandwidth");
  }
  if (num_samples < (Eigen::Index{1} << 12)) throw std::invalid_argument("at least 4096 samples are required");
  if (std::isnan(power_dbm) || power_dbm == std::numeric_limits<double>::infinity()) {
    throw std::domain_error("power must be finite or -inf");
  }

  UserSignal out;
  out.sample_rate_hz = sample_rate_hz;
  out.power_dbm = power_dbm;
  out.seed = seed;
  if (!(power_dbm > kFloorDb)) {
    out.samples = Signal::Zero(num_samples);
    return out;
  }

  // Stopband edge sits at bandwidth / 2.
  const double transition = lowpass_transition_width();
  const double cutoff = 0.5 * bandwidth_hz / sample_rate_hz - 0.5 * transition;
  if (!(cutoff > 0.0)) throw std::invalid_argument("bandwidth too narrow for the band-limiting filter");
  const Eigen::VectorXd h = design_lowpass(cutoff);
  const Eigen::Index taps = h.size();

  const Signal raw = complex_gaussian(num_samples + taps - 1, 1.0, seed);
  Signal filtered(num_samples);
  for (Eigen::Index i = 0; i < num_samples; ++i) {
    double re = 0.0;
    double im = 0.0;
    for (Eigen::Index k = 0; k < taps; ++k) {
      const std::complex<double> s = raw(i + k);
      re += h(k) * s.real();
      im += h(k) * s.imag();
    }
    filtered(i) = {re, im};
  }

  const double measured = filtered.squaredNorm() / static_cast<double>(num_samples);
  filtered *= std::sqrt(db_to_linear(power_dbm) / measured);
  out.samples = std::move(filtered);
  return out;
}

Signal pa_noiseless(std::complex<double> alpha, const Eigen::Ref<const Signal>& x) {
  Signal y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const std::complex<double> s = x(i);
    y(i) = s + alpha * std::norm(s) * s;
  }
  return y;
}

Signal pa_noise(const PaModel& pa, Eigen::Index num_samples, std::uint64_t seed) {
  if (!noise_enabled(pa)) return Signal::Zero(num_samples);
  return complex_gaussian(num_samples, db_to_linear(pa.noise_power_dbm), seed);
}

Signal pa_output(const PaModel& pa, const Eigen::Ref<const Signal>& branch_input, std::uint64_t seed) {
  for (Eigen::Index i = 0; i < branch_input.size(); ++i) {
    require_finite(branch_input(i).real(), "PA input");
    require_finite(branch_input(i).imag(), "PA input");
  }
  Signal y = pa_noiseless(pa.alpha, branch_input);
  if (noise_enabled(pa)) y += pa_noise(pa, branch_input.size(), seed);
  return y;
}

BranchAssignment::BranchAssignment(Eigen::MatrixXd phases) : phases_(std::move(phases)) {
  if (phases_.rows() < 1 || phases_.cols() < 1) throw std::invalid_argument("assignment needs branches and users");
  if (!phases_.allFinite()) throw std::domain_error("assignment phases must be finite");
  if (!phases_.row(0).isZero(0.0)) throw std::invalid_argument("reference branch phases must be zero");
}

BranchAssignment BranchAssignment::two_branch(std::span<const double> second_branch) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2, static_cast<Eigen::Index>(second_branch.size()));
  for (std::size_t k = 0; k < second_branch.size(); ++k) p(1, static_cast<Eigen::Index>(k)) = second_branch[k];
  return BranchAssignment(std::move(p));
}

Signal combine_users(std::span<const UserSignal> users, std::span<const double> phases) {
  if (users.empty()) throw std::invalid_argument("no users to combine");
  if (users.size() != phases.size()) throw std::invalid_argument("one phase per user is required");
  const Eigen::Index n = users.front().samples.size();
  Signal x = Signal::Zero(n);
  for (std::size_t k = 0; k < users.size(); ++k) {
    if (users[k].samples.size() != n) throw std::invalid_argument("user signals differ in length");
    x += std::polar(1.0, phases[k]) * users[k].samples;
  }
  return x;
}

Im3Decomposition decompose_two_user(const PaModel& pa, const UserSignal& u1, const UserSignal& u2,
                                    const BranchAssignment& phases, int branch, std::uint64_t noise_seed) {
  if (u1.samples.size() != u2.samples.size()) throw std::invalid_argument("user signals differ in length");
  if (u1.sample_rate_hz != u2.sample_rate_hz) throw std::invalid_argument("user sample rates differ");
  if (branch != 1 && branch != 2) throw std::invalid_argument("branch must be 1 or 2");
  if (phases.users() != 2 || phases.branches() < branch) {
    throw std::invalid_argument("assignment must cover two users and the requested branch");
  }

  const double p1 = phases.phase(branch - 1, 0);
  const double p2 = phases.phase(branch - 1, 1);
  const std::complex<double> e1 = std::polar(1.0, p1);
  const std::complex<double> e2 = std::polar(1.0, p2);
  const std::complex<double> eb1 = std::polar(1.0, 2.0 * p1 - p2);
  const std::complex<double> eb2 = std::polar(1.0, 2.0 * p2 - p1);

  const Eigen::Index n = u1.samples.size();
  Im3Decomposition d;
  d.linear.resize(n);
  d.self_distortion.resize(n);
  d.cross_a.resize(n);
  d.cross_b.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> a = u1.samples(i);
    const std::complex<double> b = u2.samples(i);
    const double pa_ = std::norm(a);
    const double pb = std::norm(b);
    d.linear(i) = a * e1 + b * e2;
    d.self_distortion(i) = pa_ * a * e1 + pb * b * e2;
    // Expanding |a + b|^2 (a + b) gives each Type-A product twice.
    d.cross_a(i) = 2.0 * (pb * a * e1 + pa_ * b * e2);
    d.cross_b(i) = a * a * std::conj(b) * eb1 + b * b * std::conj(a) * eb2;
  }
  d.noise = pa_noise(pa, n, noise_seed);
  return d;
}

void write_iq(const std::filesystem::path& path, const UserSignal& signal) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "aasbound-iq 1\n"
      << "sample_rate_hz " << format_double(signal.sample_rate_hz) << '\n'
      << "center_offset_hz " << format_double(signal.center_offset_hz) << '\n'
      << "power_dbm " << format_double(signal.power_dbm) << '\n'
      << "seed " << signal.seed << '\n'
      << "num_samples " << signal.samples.size() << '\n'
      << "end\n";
  for (Eigen::Index i = 0; i < signal.samples.size(); ++i) {
    const double iq[2] = {signal.samples(i).real(), signal.samples(i).imag()};
    out.write(reinterpret_cast<const char*>(iq), sizeof(iq));
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

UserSignal read_iq(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  if (line != "aasbound-iq 1") throw std::runtime_error(path.string() + ": not an aasbound I/Q file");
  UserSignal s;
  Eigen::Index n = -1;
  while (std::getline(in, line) && line != "end") {
    std::istringstream fields(line);
    std::string key, value;
    fields >> key >> value;
    if (key == "sample_rate_hz") s.sample_rate_hz = parse_double(value);
    else if (key == "center_offset_hz") s.center_offset_hz = parse_double(value);
    else if (key == "power_dbm") s.power_dbm = parse_double(value);
    else if (key == "seed") s.seed = std::stoull(value);
    else if (key == "num_samples") n = std::stoll(value);
    else throw std::runtime_error(path.string() + ": unknown header field " + key);
  }
  if (n < 0) throw std::runtime_error(path.string() + ": missing num_samples");
  s.samples.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double iq[2];
    in.read(reinterpret_cast<char*>(iq), sizeof(iq));
    if (!in) throw std::runtime_error(path.string() + ": truncated sample data");
    s.samples(i) = {iq[0], iq[1]};
  }
  return s;
}

}  // namespace aasbound
