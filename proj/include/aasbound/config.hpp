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

#ifndef AASBOUND_CONFIG_HPP
#define AASBOUND_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "aasbound/envelope.hpp"
#include "aasbound/oracle.hpp"
#include "aasbound/spectral.hpp"

namespace aasbound {

/// Parse or validation failure; the message carries "<source>:<line>:".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One scenario file with every default resolved. Sections: [scenario],
/// [pattern], [geometry], [pa], [users], [bands], [grids], [margins], [seed],
/// [validate].
struct ScenarioConfig {
  std::string name = "scenario";

  ElementPatternParams<double> pattern{};
  ArrayVariant geometry = TwoElementArray<double>{};
  PaModel pa{};
  /// When set, pa.alpha is replaced by the real coefficient reaching this ACLR.
  std::optional<double> target_aclr_db;

  double bandwidth_hz = 20e6;
  double sample_rate_hz = 128e6;
  std::int64_t num_samples = std::int64_t{1} << 16;
  double carrier_hz = 0.0;
  std::vector<BeamUser> users;

  std::vector<BandDefinition> bands;
  std::vector<SpectralRegion> band_regions;

  double angle_min_deg = -60.0;
  double angle_max_deg = 60.0;
  double angle_step_deg = 1.0;
  int phase_steps = 128;
  double rbw_hz = 100e3;
  double theta_deg = 90.0;
  std::vector<double> steering_deg;

  UncertaintyMargins margins{};
  std::uint64_t seed = 1;

  /// Test hook: added to every analytic envelope before validation.
  double inject_envelope_offset_db = 0.0;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

  /// First band whose region matches, or -1.
  int band_for_region(SpectralRegion region) const;
};

/// Parses config text; `source` names the document in error messages.
/// Each override is "section.key=value" and replaces or adds that key.
ScenarioConfig parse_config(const std::string& text, const std::string& source = "<config>",
                            const std::vector<std::string>& overrides = {});

ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

/// Canonical text form; parse_config(dump_config(c)) == c.
std::string dump_config(const ScenarioConfig& config);

FarFieldScenario to_scenario(const ScenarioConfig& config, std::uint64_t budget_samples = kDefaultSampleBudget);

}  // namespace aasbound

#endif  // AASBOUND_CONFIG_HPP
