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

// Independent reference implementations and random generators for tests.
// Nothing here calls into the library code it is used to check.

#ifndef AASBOUND_TESTS_ORACLES_HPP
#define AASBOUND_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

inline double db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double v) { return std::pow(10.0, v / 10.0); }

/// -min(12 (phi/hpbw)^2, am), phi in degrees within [-180, 180].
inline double pattern_db(double gain, double hpbw, double am, double phi) {
  const double a = 12.0 * (phi / hpbw) * (phi / hpbw);
  return gain - (a < am ? a : am);
}

/// |1 + exp(j(2 pi d sin phi + dphi))| evaluated as a complex sum.
inline double pair_af(double d, double phi_deg, double dphi) {
  return std::abs(cd(1.0, 0.0) + std::polar(1.0, 2.0 * pi * d * std::sin(phi_deg * pi / 180.0) + dphi));
}

inline cd aas_af(int rows, int cols, double dv, double dh, double pv, double ph, double theta_deg, double phi_deg) {
  const double th = theta_deg * pi / 180.0;
  const double ph_r = phi_deg * pi / 180.0;
  cd sum = 0.0;
  for (int m = 0; m < rows; ++m) {
    for (int n = 0; n < cols; ++n) {
      const double arg = m * (2.0 * pi * dv * std::cos(th) + pv) + n * (2.0 * pi * dh * std::sin(th) * std::sin(ph_r) + ph);
      sum += cd(std::cos(arg), std::sin(arg));
    }
  }
  return sum;
}

/// Welch periodogram via a direct DFT: periodic Hann, 50 % overlap, bins in
/// milliwatts ordered from -fs/2, summing to the mean power.
inline std::vector<double> direct_welch(const std::vector<cd>& x, int len) {
  std::vector<double> w(len);
  double u = 0.0;
  for (int i = 0; i < len; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * pi * i / len);
    u += w[i] * w[i];
  }
  const int hop = len / 2;
  const int segs = (static_cast<int>(x.size()) - len) / hop + 1;
  std::vector<double> acc(len, 0.0);
  for (int s = 0; s < segs; ++s) {
    for (int k = 0; k < len; ++k) {
      cd bin = 0.0;
      for (int i = 0; i < len; ++i) bin += x[s * hop + i] * w[i] * std::polar(1.0, -2.0 * pi * k * i / len);
      acc[k] += std::norm(bin);
    }
  }
  std::vector<double> out(len);
  for (int k = 0; k < len; ++k) out[(k + len / 2) % len] = acc[k] / (segs * len * u);
  return out;
}

inline double mean_power(const std::vector<cd>& x) {
  double p = 0.0;
  for (const auto& v : x) p += std::norm(v);
  return p / static_cast<double>(x.size());
}

/// Seeded draws for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  cd gaussian(double power = 1.0) {
    std::normal_distribution<double> n(0.0, std::sqrt(power / 2.0));
    return {n(rng_), n(rng_)};
  }
  std::vector<cd> gaussian_vector(std::size_t n, double power = 1.0) {
    std::vector<cd> v(n);
    for (auto& x : v) x = gaussian(power);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // AASBOUND_TESTS_ORACLES_HPP
