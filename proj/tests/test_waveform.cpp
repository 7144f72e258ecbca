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
#include <filesystem>
#include <limits>
#include <set>

#include "aasbound/waveform.hpp"
#include "support/oracles.hpp"

using namespace aasbound;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double power_dbm(const Signal& x) { return 10.0 * std::log10(x.squaredNorm() / static_cast<double>(x.size())); }

double relative_rms(const Signal& a, const Signal& b) { return (a - b).norm() / b.norm(); }

UserSignal random_user(oracle::Gen& gen, Eigen::Index n) {
  UserSignal u;
  u.samples.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) u.samples(i) = gen.gaussian(gen.uniform(0.1, 3.0));
  u.sample_rate_hz = 1.0;
  return u;
}

}  // namespace

TEST_SUITE("waveform") {

TEST_CASE("user signal power, silence and determinism") {
  const UserSignal u = generate_user_signal(20e6, 122.88e6, 1 << 16, 0.0, 1);
  CHECK(u.samples.size() == (1 << 16));
  CHECK(std::abs(power_dbm(u.samples)) < 0.1);
  CHECK(std::abs(u.samples.mean()) < 0.02);

  const UserSignal again = generate_user_signal(20e6, 122.88e6, 1 << 16, 0.0, 1);
  CHECK(again.samples == u.samples);
  CHECK(generate_user_signal(20e6, 122.88e6, 1 << 16, 0.0, 2).samples != u.samples);

  const UserSignal quiet = generate_user_signal(20e6, 122.88e6, 1 << 12, -kInf, 1);
  CHECK(quiet.samples.isZero(0.0));
}

TEST_CASE("user signal preconditions") {
  CHECK_THROWS_AS(generate_user_signal(40e6, 122.88e6, 1 << 16, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_user_signal(20e6, 122.88e6, 4095, 0.0, 1), std::invalid_argument);
  CHECK_NOTHROW(generate_user_signal(20e6, 80e6, 4096, 0.0, 1));
}

TEST_CASE("property: declared power is met for random drives") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 12; ++trial) {
    const double p = gen.uniform(-40.0, 30.0);
    const double fs = gen.uniform(4.0, 10.0) * 10e6;
    const UserSignal u = generate_user_signal(10e6, fs, 1 << 14, p, 100 + trial);
    CHECK(power_dbm(u.samples) == doctest::Approx(p).epsilon(1e-9));
    CHECK(u.power_dbm == p);
  }
}

TEST_CASE("lowpass: unit DC gain, symmetric taps, stopband") {
  const double cutoff = 0.07;
  const Eigen::VectorXd h = design_lowpass(cutoff);
  REQUIRE(h.size() == 257);
  CHECK(h.sum() == doctest::Approx(1.0).epsilon(1e-14));
  for (Eigen::Index i = 0; i < h.size(); ++i) CHECK(h(i) == doctest::Approx(h(h.size() - 1 - i)).epsilon(1e-15));

  const double tw = lowpass_transition_width();
  CHECK(tw == doctest::Approx((8.7 + 8.0 / 0.1102 - 7.95) / (14.36 * 256)).epsilon(1e-12));
  auto response_db = [&](double f) {
    std::complex<double> s = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) s += h(i) * std::polar(1.0, -2.0 * oracle::pi * f * i);
    return 20.0 * std::log10(std::abs(s));
  };
  CHECK(response_db(cutoff) == doctest::Approx(-6.02).epsilon(0.01));
  for (double f = cutoff + 0.5 * tw; f < 0.5; f += 0.001) CHECK(response_db(f) < -70.0);
  for (double f = 0.0; f < cutoff - 0.5 * tw; f += 0.001) CHECK(std::abs(response_db(f)) < 0.01);
}

TEST_CASE("seed derivation separates streams") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t master : {0ULL, 1ULL, 77ULL}) {
    for (std::uint64_t index = 0; index < 64; ++index) {
      seen.insert(derive_seed(master, index, StreamRole::UserSignal));
      seen.insert(derive_seed(master, index, StreamRole::PaNoise));
    }
  }
  CHECK(seen.size() == 3 * 64 * 2);
  CHECK(derive_seed(5, 3, StreamRole::PaNoise) == derive_seed(5, 3, StreamRole::PaNoise));
}

TEST_CASE("PA: linear noiseless identity") {
  oracle::Gen gen(32);
  const UserSignal u = random_user(gen, 4096);
  const PaModel pa{{0.0, 0.0}, -kInf};
  CHECK(pa_output(pa, u.samples, 9) == u.samples);
  CHECK(pa_noise(pa, 16, 9).isZero(0.0));
}

TEST_CASE("PA: constant input and cubic scaling") {
  const PaModel pa{{-0.05, 0.0}, -30.0};
  const std::complex<double> c = std::polar(1.0, 0.7);
  const Signal x = Signal::Constant(4096, c);
  const Signal w = pa_noise(pa, 4096, 5);
  const Signal y = pa_output(pa, x, 5);
  CHECK(((y - w).array() - c * 0.95).abs().maxCoeff() < 1e-15);
  CHECK(std::abs(power_dbm(w) + 30.0) < 0.2);

  oracle::Gen gen(33);
  const Signal v = random_user(gen, 1024).samples;
  const Signal cubic1 = pa_noiseless({1.0, 0.0}, v) - v;
  const Signal cubic2 = pa_noiseless({1.0, 0.0}, Signal(2.0 * v)) - 2.0 * v;
  CHECK(relative_rms(cubic2, Signal(8.0 * cubic1)) < 1e-14);
}

TEST_CASE("property: noiseless PA commutes with a phase rotation") {
  oracle::Gen gen(34);
  for (int trial = 0; trial < 50; ++trial) {
    const std::complex<double> alpha(gen.uniform(-0.2, 0.0), gen.uniform(-0.05, 0.05));
    const Signal x = random_user(gen, 512).samples;
    const std::complex<double> r = std::polar(1.0, gen.uniform(-oracle::pi, oracle::pi));
    CHECK(relative_rms(pa_noiseless(alpha, Signal(r * x)), Signal(r * pa_noiseless(alpha, x))) < 1e-14);
  }
}

TEST_CASE("branch noise streams are uncorrelated") {
  const PaModel pa{{0.0, 0.0}, 0.0};
  const Eigen::Index n = 1 << 16;
  const Signal w1 = pa_noise(pa, n, derive_seed(1, 0, StreamRole::PaNoise));
  const Signal w2 = pa_noise(pa, n, derive_seed(1, 1, StreamRole::PaNoise));
  const double rho = std::abs(w1.dot(w2)) / (w1.norm() * w2.norm());
  CHECK(rho < 0.02);
}

TEST_CASE("branch assignment") {
  CHECK_THROWS(BranchAssignment(Eigen::MatrixXd::Ones(2, 2)));
  const std::vector<double> second{0.3, -1.1};
  const BranchAssignment a = BranchAssignment::two_branch(second);
  CHECK(a.branches() == 2);
  CHECK(a.users() == 2);
  CHECK(a.phase(0, 1) == 0.0);
  CHECK(a.phase(1, 1) == -1.1);
}

TEST_CASE("combine users") {
  oracle::Gen gen(35);
  const std::vector<UserSignal> users{random_user(gen, 256), random_user(gen, 256)};
  const std::vector<double> phases{0.4, -2.0};
  const Signal s = combine_users(users, phases);
  for (Eigen::Index i = 0; i < 256; ++i) {
    const auto expect = users[0].samples(i) * std::polar(1.0, 0.4) + users[1].samples(i) * std::polar(1.0, -2.0);
    CHECK(std::abs(s(i) - expect) < 1e-14);
  }
}

TEST_CASE("decomposition: single-user degeneracy") {
  oracle::Gen gen(36);
  const PaModel pa{{-0.05, 0.0}, -50.0};
  UserSignal u1 = random_user(gen, 2048);
  UserSignal u2 = u1;
  u2.samples.setZero();
  const std::vector<double> second{0.9, -0.4};
  const auto d = decompose_two_user(pa, u1, u2, BranchAssignment::two_branch(second), 2, 17);
  CHECK(d.cross_a.isZero(0.0));
  CHECK(d.cross_b.isZero(0.0));
  const std::complex<double> r = std::polar(1.0, 0.9);
  for (Eigen::Index i = 0; i < 2048; ++i) {
    const auto x = u1.samples(i);
    CHECK(std::abs(d.self_distortion(i) - std::norm(x) * x * r) < 1e-13);
  }
}

TEST_CASE("decomposition: identical branches when phases are zero") {
  oracle::Gen gen(37);
  const PaModel pa{{-0.05, 0.0}, -40.0};
  const UserSignal u1 = random_user(gen, 1024);
  const UserSignal u2 = random_user(gen, 1024);
  const std::vector<double> zero{0.0, 0.0};
  const auto phases = BranchAssignment::two_branch(zero);
  const auto b1 = decompose_two_user(pa, u1, u2, phases, 1, 3);
  const auto b2 = decompose_two_user(pa, u1, u2, phases, 2, 3);
  CHECK(b1.linear == b2.linear);
  CHECK(b1.self_distortion == b2.self_distortion);
  CHECK(b1.cross_a == b2.cross_a);
  CHECK(b1.cross_b == b2.cross_b);
}

TEST_CASE("property: decomposition reconstructs the PA output and carries the cross phases") {
  oracle::Gen gen(38);
  for (int trial = 0; trial < 25; ++trial) {
    const PaModel pa{{gen.uniform(-0.2, 0.0), gen.uniform(-0.02, 0.02)}, gen.uniform(-60.0, -20.0)};
    const UserSignal u1 = random_user(gen, 2048);
    const UserSignal u2 = random_user(gen, 2048);
    const double p1 = gen.uniform(-oracle::pi, oracle::pi);
    const double p2 = gen.uniform(-oracle::pi, oracle::pi);
    const std::vector<double> second{p1, p2};
    const std::uint64_t seed = 1000 + trial;
    const auto d = decompose_two_user(pa, u1, u2, BranchAssignment::two_branch(second), 2, seed);

    const std::vector<UserSignal> users{u1, u2};
    const Signal x = combine_users(users, second);
    CHECK(relative_rms(d.reconstruct(pa.alpha), pa_output(pa, x, seed)) < 1e-12);

    const std::complex<double> e1 = std::polar(1.0, p1);
    const std::complex<double> e2 = std::polar(1.0, p2);
    Signal xa(2048), xb(2048);
    for (Eigen::Index i = 0; i < 2048; ++i) {
      const auto a = u1.samples(i);
      const auto b = u2.samples(i);
      xa(i) = 2.0 * (std::norm(b) * a * e1 + std::norm(a) * b * e2);
      xb(i) = a * a * std::conj(b) * std::polar(1.0, 2 * p1 - p2) + b * b * std::conj(a) * std::polar(1.0, 2 * p2 - p1);
    }
    CHECK(relative_rms(d.cross_a, xa) < 1e-13);
    CHECK(relative_rms(d.cross_b, xb) < 1e-13);
  }
}

TEST_CASE("decomposition preconditions") {
  oracle::Gen gen(39);
  const PaModel pa{};
  const UserSignal u1 = random_user(gen, 1024);
  const UserSignal u2 = random_user(gen, 512);
  const std::vector<double> second{0.0, 0.0};
  CHECK_THROWS(decompose_two_user(pa, u1, u2, BranchAssignment::two_branch(second), 2, 1));
  CHECK_THROWS(decompose_two_user(pa, u1, u1, BranchAssignment::two_branch(second), 3, 1));
}

TEST_CASE("IQ file round trip") {
  const UserSignal u = generate_user_signal(20e6, 128e6, 4096, -3.5, 42);
  const auto path = std::filesystem::temp_directory_path() / "aasbound_test_roundtrip.iq";
  write_iq(path, u);
  const UserSignal back = read_iq(path);
  CHECK(back.samples == u.samples);
  CHECK(back.sample_rate_hz == u.sample_rate_hz);
  CHECK(back.power_dbm == u.power_dbm);
  CHECK(back.seed == u.seed);
  std::filesystem::remove(path);
}

}
