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

#include "aasbound/harness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aasbound/io.hpp"
#include "aasbound/spectral.hpp"
#include "aasbound/units.hpp"
#include "aasbound/waveform.hpp"

namespace aasbound {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kSignalTolDb = 0.3;
constexpr double kIm3TolDb = 0.5;
constexpr double kNoiseFlatnessTolDb = 0.5;
constexpr double kNoiseBoresightTolDb = 0.3;
constexpr double kSteeringTolDb = 1.0;
constexpr double kMuSlackDb = 0.5;
constexpr int kMinNoiseSegments = 32;

double round2(double v) { return std::round(v * 100.0) / 100.0; }

double power_sum_db(double a_db, double b_db) {
  return linear_to_db(db_to_linear(a_db) + db_to_linear(b_db));
}

double coherent_gain_db(const FarFieldScenario& s) {
  if (const auto* g = std::get_if<ArrayGeometry<double>>(&s.geometry)) return coherent_offset_db(*g);
  return kCoherentPairGainDb;
}

double incoherent_gain_db(const FarFieldScenario& s) {
  if (const auto* g = std::get_if<ArrayGeometry<double>>(&s.geometry)) return incoherent_offset_db(*g);
  return kIncoherentPairGainDb;
}

AngularCut coherent_cut(const FarFieldScenario& s, double p_db, SpectralRegion region) {
  RegimePowers powers;
  if (const auto* g = std::get_if<ArrayGeometry<double>>(&s.geometry)) {
    powers.p_sub = p_db;
    return envelope_coherent_aas(powers, s.pattern, *g, s.angles_deg);
  }
  if (region == SpectralRegion::Im3Dominated) {
    powers.p_im3 = p_db;
    return envelope_im3(powers, s.pattern, s.angles_deg);
  }
  powers.p_e = p_db;
  return envelope_signal(powers, s.pattern, s.angles_deg);
}

AngularCut noise_cut(const FarFieldScenario& s, double p_db) {
  RegimePowers powers;
  if (const auto* g = std::get_if<ArrayGeometry<double>>(&s.geometry)) {
    powers.p_noise_s = p_db;
    return envelope_noise_aas(powers, s.pattern, *g, s.angles_deg);
  }
  powers.p_noise = p_db;
  AngularCut cut{s.angles_deg, Eigen::VectorXd(s.angles_deg.size()), "noise"};
  for (Eigen::Index i = 0; i < cut.size(); ++i) cut.values_db(i) = eirp_noise_two_element(powers, s.pattern, s.angles_deg(i));
  return cut;
}

AngularCut shifted(AngularCut cut, double offset_db) {
  if (offset_db != 0.0) cut.values_db.array() += offset_db;
  return cut;
}

int reference_band(const ScenarioConfig& c) {
  const int b = c.band_for_region(SpectralRegion::SignalDominated);
  return b < 0 ? 0 : b;
}

std::filesystem::path artifact(const HarnessOptions& o, const char* dir, const ScenarioConfig& c,
                               const std::string& suffix) {
  return o.out_dir / dir / (artifact_stem(c) + "_" + suffix);
}

class Writer {
 public:
  explicit Writer(CommandResult& result) : result_(result) {}
  void text(const std::filesystem::path& path, const std::string& content) {
    write_text_file(path, content);
    result_.files.push_back(path);
  }
  void cuts(const std::filesystem::path& path, std::span<const AngularCut> cuts) {
    std::ostringstream os;
    write_cuts_csv(os, cuts);
    text(path, os.str());
  }

 private:
  CommandResult& result_;
};

Json cut_summary(const AngularCut& cut) {
  return Json{{"label", cut.label}, {"boresight_db", cut.values_db(cut.nearest(0.0))},
              {"peak_db", cut.values_db(cut.argmax())}, {"peak_angle_deg", cut.angles_deg(cut.argmax())}};
}

Json claim(const std::string& name, const std::string& band, double measured, double tolerance, bool pass) {
  return Json{{"claim", name}, {"band", band}, {"measured_db", measured}, {"tolerance_db", tolerance}, {"pass", pass}};
}

Json scenario_json(const ScenarioConfig& c) {
  Json users = Json::array();
  for (const auto& u : c.users) users.push_back(Json{{"power_dbm", u.power_dbm}, {"steer_deg", u.steer_deg}});
  Json bands = Json::array();
  for (std::size_t b = 0; b < c.bands.size(); ++b) {
    bands.push_back(Json{{"label", c.bands[b].label},
                         {"low_hz", c.bands[b].f_low_hz},
                         {"high_hz", c.bands[b].f_high_hz},
                         {"region", to_string(c.band_regions[b])}});
  }
  return Json{{"name", c.name},
              {"seed", c.seed},
              {"geometry", std::holds_alternative<TwoElementArray<double>>(c.geometry) ? "two_element" : "aas"},
              {"alpha", {c.pa.alpha.real(), c.pa.alpha.imag()}},
              {"noise_power_dbm", c.pa.noise_power_dbm},
              {"target_aclr_db", c.target_aclr_db ? Json(*c.target_aclr_db) : Json(nullptr)},
              {"users", users},
              {"bands", bands}};
}

Json directions_json(const MuImDirections& d) {
  auto one = [](const ImDirection& x) {
    Json j{{"sine", x.sine}, {"visible", x.visible}};
    j["angle_deg"] = x.visible ? Json(x.angle_deg) : Json(nullptr);
    return j;
  };
  return Json{{"b1", one(d.b1)}, {"b2", one(d.b2)}};
}

std::string directions_csv(const MuImDirections& d) {
  std::ostringstream os;
  os << "product,angle_deg,sine,visible\n";
  auto row = [&](const char* name, const ImDirection& x) {
    os << name << ',' << (x.visible ? format_fixed(x.angle_deg, 4) : std::string("nan")) << ','
       << format_fixed(x.sine, 6) << ',' << (x.visible ? "true" : "false") << '\n';
  };
  row("b1", d.b1);
  row("b2", d.b2);
  return os.str();
}

void require_two_users(const ScenarioConfig& c) {
  if (c.users.size() != 2) {
    throw std::invalid_argument("the multi-user command needs exactly two users, config has " +
                                std::to_string(c.users.size()));
  }
}

}  // namespace

std::string artifact_stem(const ScenarioConfig& config) {
  return config.name + "_s" + std::to_string(config.seed);
}

ScenarioConfig single_user_reference(const ScenarioConfig& config) {
  ScenarioConfig su = config;
  double total = 0.0;
  for (const auto& u : config.users) total += db_to_linear(u.power_dbm);
  su.users = {BeamUser{total > 0.0 ? 10.0 * std::log10(total) : -std::numeric_limits<double>::infinity(), 0.0}};
  return su;
}

AngularCut band_envelope(const FarFieldScenario& s, const ConductedPowers& conducted, std::size_t band) {
  AngularCut coh = coherent_cut(s, conducted.coherent_dbm.at(band), SpectralRegion::SignalDominated);
  const AngularCut noi = noise_cut(s, conducted.noise_dbm.at(band));
  for (Eigen::Index i = 0; i < coh.size(); ++i) coh.values_db(i) = power_sum_db(coh.values_db(i), noi.values_db(i));
  coh.label = s.bands.at(band).label;
  return coh;
}

AngularCut regime_envelope(const FarFieldScenario& s, const ConductedPowers& conducted, std::size_t band,
                           SpectralRegion region) {
  AngularCut cut = region == SpectralRegion::NoiseDominated ? noise_cut(s, conducted.noise_dbm.at(band))
                                                            : coherent_cut(s, conducted.coherent_dbm.at(band), region);
  cut.label = to_string(region);
  return cut;
}

double measure_aclr_db(const ScenarioConfig& config, std::complex<double> alpha) {
  const int sig = config.band_for_region(SpectralRegion::SignalDominated);
  if (sig < 0 || config.band_for_region(SpectralRegion::Im3Dominated) < 0) {
    throw std::invalid_argument("ACLR needs a signal band and at least one IM3 band");
  }
  const FarFieldScenario s = to_scenario(config);
  const std::vector<UserSignal> users = generate_users(s);
  const std::vector<double> zero(users.size(), 0.0);
  const Spectrum psd = estimate_psd(pa_noiseless(alpha, combine_users(users, zero)), s.sample_rate_hz, s.rbw_hz);
  double adjacent = -std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < config.bands.size(); ++b) {
    if (config.band_regions[b] == SpectralRegion::Im3Dominated) adjacent = std::max(adjacent, integrate_band(psd, config.bands[b]));
  }
  return integrate_band(psd, config.bands[static_cast<std::size_t>(sig)]) - adjacent;
}

double calibrate_alpha(const ScenarioConfig& config, double target_aclr_db) {
  require_finite(target_aclr_db, "target ACLR");
  double lo = std::log10(1e-6);  // high ACLR
  double hi = std::log10(0.1);   // low ACLR
  auto aclr = [&](double log_mag) { return measure_aclr_db(config, {-std::pow(10.0, log_mag), 0.0}); };
  const double aclr_lo = aclr(lo);
  const double aclr_hi = aclr(hi);
  if (target_aclr_db > aclr_lo || target_aclr_db < aclr_hi) {
    throw std::invalid_argument("target ACLR " + format_fixed(target_aclr_db, 2) + " dB is outside the reachable range [" +
                                format_fixed(aclr_hi, 2) + ", " + format_fixed(aclr_lo, 2) + "] dB");
  }
  for (int i = 0; i < 48; ++i) {
    const double mid = 0.5 * (lo + hi);
    (aclr(mid) > target_aclr_db ? lo : hi) = mid;
  }
  return -std::pow(10.0, 0.5 * (lo + hi));
}

ScenarioConfig resolve_alpha(const ScenarioConfig& config) {
  if (!config.target_aclr_db) return config;
  ScenarioConfig out = config;
  out.pa.alpha = {calibrate_alpha(config, *config.target_aclr_db), 0.0};
  return out;
}

CommandResult run_envelope(const ScenarioConfig& input, const HarnessOptions& options) {
  const ScenarioConfig config = resolve_alpha(input);
  const FarFieldScenario s = to_scenario(single_user_reference(config), options.budget_samples);
  const ConductedPowers conducted = conducted_band_powers(s);

  std::vector<AngularCut> envelopes;
  std::vector<AngularCut> bounds;
  Json regimes = Json::array();
  for (SpectralRegion region :
       {SpectralRegion::SignalDominated, SpectralRegion::Im3Dominated, SpectralRegion::NoiseDominated}) {
    const int b = config.band_for_region(region);
    if (b < 0) continue;
    const auto band = static_cast<std::size_t>(b);
    const AngularCut env = regime_envelope(s, conducted, band, region);
    const AngularCut bound = apply_margins(env, config.margins, region);
    regimes.push_back(Json{{"region", to_string(region)},
                           {"band", config.bands[band].label},
                           {"conducted_dbm",
                            region == SpectralRegion::NoiseDominated ? conducted.noise_dbm[band] : conducted.coherent_dbm[band]},
                           {"margin_db", region == SpectralRegion::SignalDominated ? config.margins.in_band_db
                                                                                   : config.margins.oob_db},
                           {"envelope", cut_summary(env)},
                           {"bound", cut_summary(bound)}});
    envelopes.push_back(env);
    bounds.push_back(bound);
  }
  if (envelopes.empty()) throw std::invalid_argument("config assigns no band to any region");

  if (options.normalize_boresight) {
    const AngularCut reference = envelopes.front();
    for (auto& c : envelopes) c = normalize_to_boresight(c, reference);
    for (auto& c : bounds) c = normalize_to_boresight(c, reference);
  }

  const double coh = coherent_gain_db(s);
  const double inc = incoherent_gain_db(s);
  Json report{{"command", "envelope"},
              {"scenario", scenario_json(config)},
              {"normalized", options.normalize_boresight},
              {"array_gain_db",
               {{"coherent", coh}, {"coherent_rounded", round2(coh)}, {"incoherent", inc}, {"incoherent_rounded", round2(inc)}}},
              {"regimes", regimes}};

  CommandResult result;
  result.report = report.dump(2) + "\n";
  if (!options.out_dir.empty()) {
    Writer w(result);
    for (const auto& env : envelopes) {
      w.cuts(artifact(options, "cuts", config, "envelope_" + env.label + ".csv"), std::span(&env, 1));
    }
    w.cuts(artifact(options, "cuts", config, "bound.csv"), bounds);
    w.text(artifact(options, "reports", config, "envelope_report.json"), result.report);
  }
  return result;
}

CommandResult run_validate(const ScenarioConfig& input, const HarnessOptions& options) {
  const ScenarioConfig config = resolve_alpha(input);
  const ScenarioConfig su_config = single_user_reference(config);
  const FarFieldScenario s = to_scenario(su_config, options.budget_samples);
  const SweepResult sweep = sweep_envelope(s);
  const ConductedPowers conducted = conducted_band_powers(s);
  const double offset = config.inject_envelope_offset_db;

  std::vector<AngularCut> envelopes;
  for (std::size_t b = 0; b < s.bands.size(); ++b) envelopes.push_back(shifted(band_envelope(s, conducted, b), offset));

  Json claims = Json::array();
  bool all_pass = true;
  auto add = [&](Json c) {
    all_pass = all_pass && c["pass"].get<bool>();
    claims.push_back(std::move(c));
  };

  const WelchEstimator welch(s.sample_rate_hz, s.rbw_hz);
  for (std::size_t b = 0; b < s.bands.size(); ++b) {
    const std::string& label = s.bands[b].label;
    const Eigen::VectorXd max = sweep.max_over_sweep(b);
    const double deviation = (max - envelopes[b].values_db).cwiseAbs().maxCoeff();
    switch (config.band_regions[b]) {
      case SpectralRegion::SignalDominated:
        add(claim("signal_envelope", label, deviation, kSignalTolDb, deviation <= kSignalTolDb));
        break;
      case SpectralRegion::Im3Dominated:
        add(claim("im3_envelope", label, deviation, kIm3TolDb, deviation <= kIm3TolDb));
        break;
      case SpectralRegion::NoiseDominated: {
        const double spread = (max - sweep.min_over_sweep(b)).maxCoeff();
        const bool enough = welch.segment_count(s.num_samples) >= kMinNoiseSegments;
        Json c = claim("noise_flatness", label, spread, kNoiseFlatnessTolDb, enough && spread < kNoiseFlatnessTolDb);
        c["segments"] = welch.segment_count(s.num_samples);
        add(std::move(c));
        if (std::isfinite(s.pa.noise_power_dbm)) {
          const double band_fraction = (s.bands[b].f_high_hz - s.bands[b].f_low_hz) / s.sample_rate_hz;
          const Eigen::Index k = sweep.max_cut(b).nearest(0.0);
          const double analytic = s.pa.noise_power_dbm + 10.0 * std::log10(band_fraction) +
                                  element_gain(s.pattern, sweep.angles_deg(k)) + incoherent_gain_db(s) + offset;
          const double diff = max(k) - analytic;
          Json nb = claim("noise_boresight", label, diff, kNoiseBoresightTolDb, std::abs(diff) <= kNoiseBoresightTolDb);
          nb["analytic_dbm"] = analytic;
          add(std::move(nb));
        }
        break;
      }
    }
  }

  Json report{{"command", "validate"}, {"scenario", scenario_json(config)}};

  const int sig = config.band_for_region(SpectralRegion::SignalDominated);
  const int adj = config.band_for_region(SpectralRegion::Im3Dominated);
  if (!config.steering_deg.empty() && sig >= 0 && adj >= 0) {
    Json table = Json::array();
    double worst = -std::numeric_limits<double>::infinity();
    bool steering_pass = true;
    for (double steer : config.steering_deg) {
      FarFieldScenario steered = s;
      steered.users.front().steer_deg = steer;
      const std::vector<AngularCut> cuts = steered_cuts(steered);
      const AngularCut& in = cuts[static_cast<std::size_t>(sig)];
      const AngularCut& out = cuts[static_cast<std::size_t>(adj)];
      const double in_peak = in.angles_deg(in.argmax());
      const double adj_peak = out.angles_deg(out.argmax());
      // max over phi of cut - envelope: near zero when the envelope is tight at the beam peak
      double deviation = 0.0;
      Json per_band = Json::object();
      for (int b : {sig, adj}) {
        const auto bi = static_cast<std::size_t>(b);
        const double d = (cuts[bi].values_db - envelopes[bi].values_db).maxCoeff();
        deviation = std::max(deviation, std::abs(d));
        per_band[config.bands[bi].label] = d;
      }
      const bool pass = std::abs(in_peak - adj_peak) <= 1.0 + 1e-9 && deviation < kSteeringTolDb;
      worst = std::max(worst, deviation);
      steering_pass = steering_pass && pass;
      table.push_back(Json{{"steer_deg", steer},
                           {"in_band_peak_deg", in_peak},
                           {"adjacent_peak_deg", adj_peak},
                           {"max_deviation_db", per_band},
                           {"pass", pass}});
    }
    add(claim("steering", config.bands[static_cast<std::size_t>(sig)].label + "+" +
                              config.bands[static_cast<std::size_t>(adj)].label,
              worst, kSteeringTolDb, steering_pass));
    report["steering"] = table;
  }

  if (config.users.size() == 2) {
    const FarFieldScenario mu = to_scenario(config, options.budget_samples);
    const std::vector<AngularCut> cuts = mu_cut(mu);
    report["mu_directions"] = directions_json(mu_im_directions(config.users[0].steer_deg, config.users[1].steer_deg));
    for (std::size_t b = 0; b < cuts.size(); ++b) {
      const BoundReport r = check_mu_bound(cuts[b], shifted(band_envelope(s, conducted, b), offset), kMuSlackDb);
      Json c = claim("mu_bound", cuts[b].label, r.worst_margin_db, kMuSlackDb, r.pass);
      c["worst_angle_deg"] = r.worst_angle_deg;
      add(std::move(c));
    }
  }

  report["claims"] = claims;
  report["pass"] = all_pass;

  CommandResult result;
  result.pass = all_pass;
  result.report = report.dump(2) + "\n";
  if (!options.out_dir.empty()) {
    Writer w(result);
    std::ostringstream sweep_csv;
    write_sweep_csv(sweep_csv, sweep);
    w.text(artifact(options, "cuts", config, "sweep.csv"), sweep_csv.str());
    Json meta{{"seed", sweep.seed},
              {"angles_deg", {{"min", config.angle_min_deg}, {"max", config.angle_max_deg}, {"step", config.angle_step_deg},
                              {"count", sweep.angles_deg.size()}}},
              {"phase_steps", sweep.phases_rad.size()},
              {"rbw_hz", s.rbw_hz},
              {"num_samples", s.num_samples},
              {"alpha", {s.pa.alpha.real(), s.pa.alpha.imag()}},
              {"noise_power_dbm", s.pa.noise_power_dbm},
              {"user_power_dbm", s.users.front().power_dbm},
              {"bands", sweep.band_labels}};
    w.text(artifact(options, "reports", config, "sweep_meta.json"), meta.dump(2) + "\n");
    w.text(artifact(options, "reports", config, "validate_report.json"), result.report);
  }
  return result;
}

CommandResult run_mu(const ScenarioConfig& input, const HarnessOptions& options) {
  const ScenarioConfig config = resolve_alpha(input);
  require_two_users(config);
  const FarFieldScenario mu = to_scenario(config, options.budget_samples);
  std::vector<AngularCut> cuts = mu_cut(mu);
  const FarFieldScenario su = to_scenario(single_user_reference(config), options.budget_samples);
  const ConductedPowers conducted = conducted_band_powers(su);
  const MuImDirections directions = mu_im_directions(config.users[0].steer_deg, config.users[1].steer_deg);

  std::vector<AngularCut> envelopes;
  Json bounds = Json::array();
  bool all_pass = true;
  for (std::size_t b = 0; b < cuts.size(); ++b) {
    envelopes.push_back(band_envelope(su, conducted, b));
    envelopes.back().label = cuts[b].label + "_su_envelope";
    const BoundReport r = check_mu_bound(cuts[b], envelopes.back(), kMuSlackDb);
    all_pass = all_pass && r.pass;
    bounds.push_back(Json{{"band", cuts[b].label},
                          {"worst_margin_db", r.worst_margin_db},
                          {"worst_angle_deg", r.worst_angle_deg},
                          {"slack_db", r.slack_db},
                          {"pass", r.pass}});
  }

  Json lobes = Json::array();
  for (const auto& c : cuts) lobes.push_back(cut_summary(c));

  if (options.normalize_boresight) {
    const AngularCut reference = envelopes[static_cast<std::size_t>(reference_band(config))];
    for (auto& c : cuts) c = normalize_to_boresight(c, reference);
    for (auto& c : envelopes) c = normalize_to_boresight(c, reference);
  }

  Json report{{"command", "mu"},
              {"scenario", scenario_json(config)},
              {"normalized", options.normalize_boresight},
              {"directions", directions_json(directions)},
              {"cuts", lobes},
              {"bound", bounds},
              {"pass", all_pass}};

  CommandResult result;
  result.pass = all_pass;
  result.report = report.dump(2) + "\n";
  if (!options.out_dir.empty()) {
    Writer w(result);
    w.cuts(artifact(options, "cuts", config, "mu_cuts.csv"), cuts);
    w.cuts(artifact(options, "cuts", config, "mu_su_envelope.csv"), envelopes);
    w.text(artifact(options, "cuts", config, "mu_directions.csv"), directions_csv(directions));
    w.text(artifact(options, "reports", config, "mu_bound.json"), result.report);
  }
  return result;
}

CommandResult run_psd(const ScenarioConfig& input, const HarnessOptions& options) {
  const ScenarioConfig config = resolve_alpha(input);
  const FarFieldScenario s = to_scenario(config, options.budget_samples);
  s.validate();
  const std::vector<UserSignal> users = generate_users(s);
  const std::vector<double> zero(users.size(), 0.0);
  const Signal linear = combine_users(users, zero);
  const Signal im3 = pa_noiseless(s.pa.alpha, linear) - linear;
  const Signal noise = pa_noise(s.pa, s.num_samples, derive_seed(s.seed, 0, StreamRole::PaNoise));
  const Signal total = linear + im3 + noise;

  const Spectrum lin_psd = estimate_psd(linear, s.sample_rate_hz, s.rbw_hz);
  const Spectrum im3_psd = estimate_psd(im3, s.sample_rate_hz, s.rbw_hz);
  const Spectrum noise_psd = estimate_psd(noise, s.sample_rate_hz, s.rbw_hz);
  const Spectrum total_psd = estimate_psd(total, s.sample_rate_hz, s.rbw_hz);
  const std::vector<SpectralRegion> regions = classify_regions(lin_psd, im3_psd, noise_psd);

  Json bands = Json::array();
  for (std::size_t b = 0; b < s.bands.size(); ++b) {
    bands.push_back(Json{{"band", s.bands[b].label},
                         {"linear_dbm", integrate_band(lin_psd, s.bands[b])},
                         {"im3_dbm", integrate_band(im3_psd, s.bands[b])},
                         {"noise_dbm", integrate_band(noise_psd, s.bands[b])},
                         {"total_dbm", integrate_band(total_psd, s.bands[b])}});
  }
  Json report{{"command", "psd"}, {"scenario", scenario_json(config)}, {"rbw_hz", s.rbw_hz}, {"bands", bands}};

  CommandResult result;
  result.report = report.dump(2) + "\n";
  if (!options.out_dir.empty()) {
    Writer w(result);
    const std::pair<const char*, const Spectrum*> spectra[] = {
        {"linear", &lin_psd}, {"im3", &im3_psd}, {"noise", &noise_psd}, {"total", &total_psd}};
    for (const auto& [name, spectrum] : spectra) {
      std::ostringstream os;
      write_spectrum_csv(os, *spectrum, config.carrier_hz);
      w.text(artifact(options, "spectra", config, std::string("psd_") + name + ".csv"), os.str());
    }
    std::ostringstream os;
    write_regions_csv(os, total_psd, regions);
    w.text(artifact(options, "spectra", config, "regions.csv"), os.str());
    for (std::size_t k = 0; k < users.size(); ++k) {
      const auto path = artifact(options, "spectra", config, "user" + std::to_string(k) + ".iq");
      write_iq(path, users[k]);
      result.files.push_back(path);
    }
    w.text(artifact(options, "reports", config, "psd_report.json"), result.report);
  }
  return result;
}

}  // namespace aasbound
