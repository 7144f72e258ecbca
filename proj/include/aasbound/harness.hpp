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

#ifndef AASBOUND_HARNESS_HPP
#define AASBOUND_HARNESS_HPP

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aasbound/config.hpp"
#include "aasbound/envelope.hpp"
#include "aasbound/oracle.hpp"

namespace aasbound {

struct HarnessOptions {
  std::filesystem::path out_dir;  ///< empty: nothing is written
  bool normalize_boresight = false;
  std::uint64_t budget_samples = kDefaultSampleBudget;
};

struct CommandResult {
  bool pass = true;
  std::string report;  ///< JSON
  std::vector<std::filesystem::path> files;
};

/// "<name>_s<seed>", the prefix of every artifact.
std::string artifact_stem(const ScenarioConfig& config);

/// The same scenario with all user power moved into one boresight user.
ScenarioConfig single_user_reference(const ScenarioConfig& config);

/// Analytic envelope of one band from the conducted powers of the reference
/// branch: coherent part with the array gain, noise part with the incoherent
/// gain, added in power.
AngularCut band_envelope(const FarFieldScenario& scenario, const ConductedPowers& conducted, std::size_t band);

/// Regime cut following the region's own formula, labelled with the region name.
AngularCut regime_envelope(const FarFieldScenario& scenario, const ConductedPowers& conducted, std::size_t band,
                           SpectralRegion region);

/// In-band power over the strongest IM3-region band, dB, for the noiseless
/// reference branch driven with `alpha`.
double measure_aclr_db(const ScenarioConfig& config, std::complex<double> alpha);

/// Real negative alpha whose ACLR equals `target_aclr_db`, by bisection over
/// |alpha| in [1e-6, 0.1].
double calibrate_alpha(const ScenarioConfig& config, double target_aclr_db);

/// The config with alpha calibrated when a target ACLR is set.
ScenarioConfig resolve_alpha(const ScenarioConfig& config);

/// Analytic cuts per regime plus margined bounds.
CommandResult run_envelope(const ScenarioConfig& config, const HarnessOptions& options);

/// Oracle-versus-analytic claims; `pass` is false iff any claim fails.
CommandResult run_validate(const ScenarioConfig& config, const HarnessOptions& options);

/// Two-user cuts, predicted intermodulation directions and the bound check.
CommandResult run_mu(const ScenarioConfig& config, const HarnessOptions& options);

/// Component spectra of the reference branch and their region map.
CommandResult run_psd(const ScenarioConfig& config, const HarnessOptions& options);

}  // namespace aasbound

#endif  // AASBOUND_HARNESS_HPP
