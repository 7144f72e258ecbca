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
#include <limits>

#include "aasbound/pattern.hpp"
#include "support/oracles.hpp"

using aasbound::ElementPatternParams;

TEST_SUITE("pattern") {

TEST_CASE("attenuation at reference angles") {
  const ElementPatternParams<double> p{0.0, 85.0, 30.0};
  CHECK(aasbound::attenuation(p, 0.0) == 0.0);
  CHECK(aasbound::attenuation(p, 42.5) == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(aasbound::attenuation(p, 180.0) == -30.0);
  CHECK(aasbound::attenuation(p, -180.0) == -30.0);
}

TEST_CASE("element gain") {
  const ElementPatternParams<double> p{8.0, 85.0, 30.0};
  CHECK(aasbound::element_gain(p, 0.0) == 8.0);
  CHECK(aasbound::element_gain(p, 42.5) == doctest::Approx(5.0).epsilon(1e-15));

  const ElementPatternParams<double> z{0.0, 65.0, 25.0};
  for (double phi = -180.0; phi <= 180.0; phi += 7.5) {
    CHECK(aasbound::element_gain(z, phi) == aasbound::attenuation(z, phi));
  }
}

TEST_CASE("angles wrap into (-180, 180]") {
  const ElementPatternParams<double> p{3.0, 85.0, 30.0};
  CHECK(aasbound::element_gain(p, 370.0) == doctest::Approx(aasbound::element_gain(p, 10.0)).epsilon(1e-14));
  CHECK(aasbound::element_gain(p, -350.0) == doctest::Approx(aasbound::element_gain(p, 10.0)).epsilon(1e-14));
}

TEST_CASE("non-finite angle is a domain error") {
  const ElementPatternParams<double> p{8.0};
  CHECK_THROWS_AS(aasbound::attenuation(p, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(aasbound::element_gain(p, std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ElementPatternParams<double>{8.0}.validate());
  CHECK_THROWS(ElementPatternParams<double>{8.0, 0.0, 30.0}.validate());
  CHECK_THROWS(ElementPatternParams<double>{8.0, 85.0, 0.0}.validate());
  CHECK_THROWS(ElementPatternParams<double>{std::numeric_limits<double>::infinity()}.validate());
}

TEST_CASE("field is the amplitude of the gain") {
  const ElementPatternParams<double> p{8.0};
  const double f = aasbound::element_field(p, 20.0);
  CHECK(20.0 * std::log10(f) == doctest::Approx(aasbound::element_gain(p, 20.0)).epsilon(1e-13));
}

TEST_CASE("vectorized gain matches scalar evaluation") {
  const ElementPatternParams<double> p{5.0, 70.0, 25.0};
  const Eigen::VectorXd phi = Eigen::VectorXd::LinSpaced(73, -180.0, 180.0);
  const Eigen::ArrayXd g = aasbound::element_gain(p, phi);
  for (Eigen::Index i = 0; i < phi.size(); ++i) CHECK(g(i) == aasbound::element_gain(p, phi(i)));
}

TEST_CASE("single precision instantiation") {
  const ElementPatternParams<float> p{8.0f, 85.0f, 30.0f};
  CHECK(aasbound::element_gain(p, 42.5f) == doctest::Approx(5.0f).epsilon(1e-6));
}

TEST_CASE("property: symmetric, floored, peaked at boresight, matches oracle") {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ElementPatternParams<double> p{gen.uniform(-10.0, 25.0), gen.uniform(5.0, 180.0), gen.uniform(1.0, 40.0)};
    for (int k = 0; k < 20; ++k) {
      const double phi = gen.uniform(-180.0, 180.0);
      const double g = aasbound::element_gain(p, phi);
      CHECK(g == aasbound::element_gain(p, -phi));
      CHECK(g >= p.gain_dbi - p.front_to_back_db);
      CHECK(g <= p.gain_dbi);
      CHECK(g == doctest::Approx(oracle::pattern_db(p.gain_dbi, p.hpbw_deg, p.front_to_back_db, phi)).epsilon(1e-12));
    }
    const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(361, -180.0, 180.0);
    Eigen::Index best = 0;
    aasbound::element_gain(p, grid).maxCoeff(&best);
    CHECK(grid(best) == 0.0);
  }
}

TEST_CASE("property: non-increasing in |phi|") {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const ElementPatternParams<double> p{0.0, gen.uniform(5.0, 180.0), gen.uniform(1.0, 40.0)};
    double previous = 1.0;
    for (double phi = 0.0; phi <= 180.0; phi += 0.5) {
      const double a = aasbound::attenuation(p, phi);
      CHECK(a <= previous);
      previous = a;
    }
  }
}

}
