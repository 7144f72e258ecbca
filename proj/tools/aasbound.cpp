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

// aasbound command-line front end.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aasbound/config.hpp"
#include "aasbound/harness.hpp"

namespace {

struct Common {
  std::string config;
  std::string out;
  std::vector<std::string> sets;
  std::int64_t seed = -1;
  std::uint64_t budget = aasbound::kDefaultSampleBudget;
  bool normalize = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_out) {
  cmd->add_option("--config", c.config, "Scenario config file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--set", c.sets, "Override one key, section.key=value (repeatable)");
  cmd->add_option("--seed", c.seed, "Override seed.master")->check(CLI::NonNegativeNumber);
  if (with_out) {
    cmd->add_option("--out", c.out, "Output directory (cuts/, spectra/, reports/)");
    cmd->add_option("--budget", c.budget, "Far-field sample budget")->check(CLI::PositiveNumber);
    cmd->add_flag("--normalize-boresight", c.normalize, "Express cuts relative to the boresight signal envelope");
  }
}

aasbound::ScenarioConfig load(const Common& c) {
  std::vector<std::string> overrides = c.sets;
  if (c.seed >= 0) overrides.push_back("seed.master=" + std::to_string(c.seed));
  return aasbound::load_config(c.config, overrides);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aasbound - spatial upper bound of radiated power for active antenna arrays"};
  app.require_subcommand(1);

  Common common;
  CLI::App* envelope = app.add_subcommand("envelope", "Analytic envelopes and margined bounds");
  CLI::App* validate = app.add_subcommand("validate", "Compare the waveform oracle with the analytic envelopes");
  CLI::App* mu = app.add_subcommand("mu", "Two-user cuts, intermodulation directions and bound check");
  CLI::App* psd = app.add_subcommand("psd", "Component spectra of the reference branch");
  CLI::App* dump = app.add_subcommand("config-dump", "Print the fully resolved config");
  for (CLI::App* cmd : {envelope, validate, mu, psd}) add_common(cmd, common, true);
  add_common(dump, common, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const aasbound::ScenarioConfig config = load(common);
    if (dump->parsed()) {
      std::cout << aasbound::dump_config(config);
      return 0;
    }
    aasbound::HarnessOptions options;
    options.out_dir = common.out;
    options.normalize_boresight = common.normalize;
    options.budget_samples = common.budget;

    aasbound::CommandResult result;
    if (envelope->parsed()) result = aasbound::run_envelope(config, options);
    if (validate->parsed()) result = aasbound::run_validate(config, options);
    if (mu->parsed()) result = aasbound::run_mu(config, options);
    if (psd->parsed()) result = aasbound::run_psd(config, options);

    if (options.out_dir.empty()) {
      std::cout << result.report;
    } else {
      for (const auto& f : result.files) std::cout << f.string() << '\n';
    }
    if (!result.pass) {
      std::cerr << "aasbound: one or more claims failed\n";
      return 1;
    }
    return 0;
  } catch (const aasbound::ConfigError& e) {
    std::cerr << "aasbound: config error: " << e.what() << '\n';
    return 2;
  } catch (const aasbound::BudgetExceeded& e) {
    std::cerr << "aasbound: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "aasbound: " << e.what() << '\n';
    return 2;
  }
}
