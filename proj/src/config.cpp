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

#include "aasbound/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aasbound/io.hpp"

namespace aasbound {
namespace {

// Document model of the TOML subset used by scenario files.
using Scalar = std::variant<double, std::string, bool>;
struct Value {
  std::variant<Scalar, std::vector<Scalar>> data;
  int line = 0;  // 0 marks a command-line override
};
using Section = std::map<std::string, Value>;
struct Document {
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;
};

std::string where(const std::string& source, int line) {
  if (line == 0) return "--set";
  return source + ":" + std::to_string(line);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

Scalar parse_scalar(const std::string& raw, bool allow_bare, const std::string& at) {
  const std::string t = trim(raw);
  if (t.empty()) throw ConfigError(at + ": missing value");
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"') throw ConfigError(at + ": unterminated string");
    const std::string inner = t.substr(1, t.size() - 2);
    if (inner.find('"') != std::string::npos) throw ConfigError(at + ": embedded quote in string");
    return inner;
  }
  if (t == "true") return true;
  if (t == "false") return false;
  try {
    return parse_double(t);
  } catch (const std::invalid_argument&) {
    if (allow_bare && valid_name(t)) return t;
    throw ConfigError(at + ": cannot parse value '" + t + "'");
  }
}

Value parse_value(const std::string& raw, int line, bool allow_bare, const std::string& at) {
  const std::string t = trim(raw);
  Value v;
  v.line = line;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ConfigError(at + ": unterminated list");
    std::vector<Scalar> items;
    const std::string body = trim(t.substr(1, t.size() - 2));
    if (!body.empty()) {
      std::size_t start = 0;
      bool in_string = false;
      for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] == '"') in_string = !in_string;
        if (i == body.size() || (body[i] == ',' && !in_string)) {
          items.push_back(parse_scalar(body.substr(start, i - start), allow_bare, at));
          start = i + 1;
        }
      }
    }
    v.data = std::move(items);
  } else {
    v.data = parse_scalar(t, allow_bare, at);
  }
  return v;
}

Document parse_document(const std::string& text, const std::string& source) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    const std::string at = where(source, line_no);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(at + ": malformed section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!valid_name(current)) throw ConfigError(at + ": invalid section name '" + current + "'");
      if (doc.sections.count(current)) throw ConfigError(at + ": duplicate section [" + current + "]");
      doc.sections[current];
      doc.section_lines[current] = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(at + ": expected key = value");
    if (current.empty()) throw ConfigError(at + ": key outside of any section");
    const std::string key = trim(line.substr(0, eq));
    if (!valid_name(key)) throw ConfigError(at + ": invalid key '" + key + "'");
    Section& section = doc.sections[current];
    if (section.count(key)) throw ConfigError(at + ": duplicate key '" + key + "'");
    section[key] = parse_value(line.substr(eq + 1), line_no, false, at);
  }
  return doc;
}

void apply_override(Document& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
    throw ConfigError("--set " + assignment + ": expected section.key=value");
  }
  const std::string section = trim(assignment.substr(0, dot));
  const std::string key = trim(assignment.substr(dot + 1, eq - dot - 1));
  if (!valid_name(section) || !valid_name(key)) throw ConfigError("--set " + assignment + ": invalid key path");
  doc.sections[section][key] = parse_value(assignment.substr(eq + 1), 0, true, "--set " + assignment);
  doc.section_lines.emplace(section, 0);
}

// Typed, consumption-tracking access to one section.
class SectionReader {
 public:
  SectionReader(const Document& doc, const std::string& name, const std::string& source, bool required)
      : name_(name), source_(source) {
    const auto it = doc.sections.find(name);
    if (it == doc.sections.end()) {
      if (required) throw ConfigError(source + ": missing required section [" + name + "]");
      return;
    }
    section_ = &it->second;
    line_ = doc.section_lines.at(name);
  }

  bool present() const { return section_ != nullptr; }
  bool has(const std::string& key) const { return section_ && section_->count(key); }

  double number(const std::string& key) { return as_number(take(key), key); }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  std::int64_t integer(const std::string& key) {
    const double v = number(key);
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 9.0e15) {
      throw error(key, "expected an integer");
    }
    return static_cast<std::int64_t>(v);
  }
  std::int64_t integer(const std::string& key, std::int64_t fallback) { return has(key) ? integer(key) : fallback; }

  std::string text(const std::string& key) {
    const Value& v = take(key);
    const auto* s = std::get_if<Scalar>(&v.data);
    if (!s || !std::holds_alternative<std::string>(*s)) throw error(key, "expected a string");
    return std::get<std::string>(*s);
  }
  std::string text(const std::string& key, const std::string& fallback) { return has(key) ? text(key) : fallback; }

  std::vector<double> numbers(const std::string& key) {
    const Value& v = take(key);
    std::vector<double> out;
    if (const auto* list = std::get_if<std::vector<Scalar>>(&v.data)) {
      for (const auto& item : *list) out.push_back(as_number(item, key));
    } else {
      out.push_back(as_number(std::get<Scalar>(v.data), key));
    }
    return out;
  }
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    return has(key) ? numbers(key) : fallback;
  }

  std::vector<std::string> texts(const std::string& key) {
    const Value& v = take(key);
    std::vector<std::string> out;
    auto push = [&](const Scalar& s) {
      if (!std::holds_alternative<std::string>(s)) throw error(key, "expected strings");
      out.push_back(std::get<std::string>(s));
    };
    if (const auto* list = std::get_if<std::vector<Scalar>>(&v.data)) {
      for (const auto& item : *list) push(item);
    } else {
      push(std::get<Scalar>(v.data));
    }
    return out;
  }

  /// Rejects keys nobody asked for.
  void finish() const {
    if (!section_) return;
    for (const auto& [key, value] : *section_) {
      if (!used_.count(key)) {
        throw ConfigError(where(source_, value.line) + ": unknown key '" + key + "' in [" + name_ + "]");
      }
    }
  }

  ConfigError error(const std::string& key, const std::string& message) const {
    const int line = section_ && section_->count(key) ? section_->at(key).line : line_;
    return ConfigError(where(source_, line) + ": [" + name_ + "] " + key + ": " + message);
  }

 private:
  const Value& take(const std::string& key) {
    if (!has(key)) throw ConfigError(where(source_, line_) + ": missing required key '" + key + "' in [" + name_ + "]");
    used_.insert(key);
    return section_->at(key);
  }

  double as_number(const Value& v, const std::string& key) const {
    const auto* s = std::get_if<Scalar>(&v.data);
    if (!s) throw error(key, "expected a number, got a list");
    return as_number(*s, key);
  }
  double as_number(const Scalar& s, const std::string& key) const {
    if (!std::holds_alternative<double>(s)) throw error(key, "expected a number");
    return std::get<double>(s);
  }

  std::string name_;
  std::string source_;
  const Section* section_ = nullptr;
  int line_ = 0;
  std::set<std::string> used_;
};

template <typename Fn>
void checked(SectionReader& r, const std::string& key, Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw r.error(key, e.what());
  }
}

void require_positive(SectionReader& r, const std::string& key, double v) {
  if (!std::isfinite(v) || !(v > 0.0)) throw r.error(key, "must be a finite positive number");
}

void require_finite_value(SectionReader& r, const std::string& key, double v) {
  if (!std::isfinite(v)) throw r.error(key, "must be finite");
}

ScenarioConfig build(const Document& doc, const std::string& source) {
  static const std::set<std::string> known = {"scenario", "pattern", "geometry", "pa", "users",
                                               "bands",    "grids",   "margins",  "seed", "validate"};
  for (const auto& [name, _] : doc.sections) {
    if (!known.count(name)) throw ConfigError(where(source, doc.section_lines.at(name)) + ": unknown section [" + name + "]");
  }

  ScenarioConfig c;

  SectionReader scenario(doc, "scenario", source, false);
  c.name = scenario.text("name", c.name);
  if (!valid_name(c.name)) throw scenario.error("name", "use lowercase letters, digits and '_'");
  scenario.finish();

  SectionReader pattern(doc, "pattern", source, true);
  c.pattern.gain_dbi = pattern.number("gain_dbi");
  c.pattern.hpbw_deg = pattern.number("hpbw_deg", 85.0);
  c.pattern.front_to_back_db = pattern.number("front_to_back_db", 30.0);
  require_finite_value(pattern, "gain_dbi", c.pattern.gain_dbi);
  require_positive(pattern, "hpbw_deg", c.pattern.hpbw_deg);
  require_positive(pattern, "front_to_back_db", c.pattern.front_to_back_db);
  pattern.finish();

  SectionReader geometry(doc, "geometry", source, true);
  const std::string type = geometry.text("type");
  if (type == "two_element") {
    TwoElementArray<double> a;
    a.spacing_wavelengths = geometry.number("spacing_wavelengths", 0.5);
    require_positive(geometry, "spacing_wavelengths", a.spacing_wavelengths);
    c.geometry = a;
  } else if (type == "aas") {
    ArrayGeometry<double> g;
    g.rows = static_cast<int>(geometry.integer("rows"));
    g.cols = static_cast<int>(geometry.integer("cols"));
    g.vertical_spacing_wavelengths = geometry.number("vertical_spacing_wavelengths", 0.5);
    g.horizontal_spacing_wavelengths = geometry.number("horizontal_spacing_wavelengths", 0.5);
    g.polarizations = static_cast<int>(geometry.integer("polarizations", 1));
    checked(geometry, "type", [&] { g.validate(); });
    c.geometry = g;
  } else {
    throw geometry.error("type", "expected \"two_element\" or \"aas\"");
  }
  geometry.finish();

  SectionReader pa(doc, "pa", source, true);
  c.pa.alpha = {pa.number("alpha"), pa.number("alpha_imag", 0.0)};
  c.pa.noise_power_dbm = pa.number("noise_power_dbm");
  if (pa.has("target_aclr_db")) {
    c.target_aclr_db = pa.number("target_aclr_db");
    require_positive(pa, "target_aclr_db", *c.target_aclr_db);
  }
  require_finite_value(pa, "alpha", c.pa.alpha.real());
  require_finite_value(pa, "alpha_imag", c.pa.alpha.imag());
  if (std::isnan(c.pa.noise_power_dbm) || c.pa.noise_power_dbm == std::numeric_limits<double>::infinity()) {
    throw pa.error("noise_power_dbm", "must be finite or -inf");
  }
  pa.finish();

  SectionReader users(doc, "users", source, true);
  c.bandwidth_hz = users.number("bandwidth_hz");
  c.sample_rate_hz = users.number("sample_rate_hz");
  c.num_samples = users.integer("num_samples");
  c.carrier_hz = users.number("carrier_hz", 0.0);
  require_positive(users, "bandwidth_hz", c.bandwidth_hz);
  require_positive(users, "sample_rate_hz", c.sample_rate_hz);
  if (c.sample_rate_hz < 4.0 * c.bandwidth_hz) throw users.error("sample_rate_hz", "must be at least 4x bandwidth_hz");
  if (c.num_samples < 4096) throw users.error("num_samples", "must be at least 4096");
  if (c.carrier_hz < 0.0 || !std::isfinite(c.carrier_hz)) throw users.error("carrier_hz", "must be finite and >= 0");
  const std::vector<double> powers = users.numbers("power_dbm");
  const std::vector<double> steer = users.numbers("steer_deg");
  if (powers.empty() || powers.size() != steer.size()) {
    throw users.error("steer_deg", "power_dbm and steer_deg need one entry per user");
  }
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (std::isnan(powers[k]) || powers[k] == std::numeric_limits<double>::infinity()) {
      throw users.error("power_dbm", "must be finite or -inf");
    }
    if (!std::isfinite(steer[k]) || std::abs(steer[k]) > 90.0) throw users.error("steer_deg", "must lie in [-90, 90]");
    c.users.push_back(BeamUser{powers[k], steer[k]});
  }
  users.finish();

  SectionReader bands(doc, "bands", source, true);
  const auto labels = bands.texts("labels");
  const auto lows = bands.numbers("low_hz");
  const auto highs = bands.numbers("high_hz");
  const auto regions = bands.texts("regions");
  if (labels.empty() || lows.size() != labels.size() || highs.size() != labels.size() ||
      regions.size() != labels.size()) {
    throw bands.error("labels", "labels, low_hz, high_hz and regions need one entry per band");
  }
  std::set<std::string> seen;
  for (std::size_t b = 0; b < labels.size(); ++b) {
    if (!valid_name(labels[b]) && labels[b].find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789_-") != std::string::npos) {
      throw bands.error("labels", "labels use lowercase letters, digits, '_' and '-'");
    }
    if (!seen.insert(labels[b]).second) throw bands.error("labels", "duplicate band label '" + labels[b] + "'");
    BandDefinition band{lows[b], highs[b], labels[b]};
    checked(bands, "low_hz", [&] { band.validate(); });
    if (band.f_low_hz < -0.5 * c.sample_rate_hz || band.f_high_hz > 0.5 * c.sample_rate_hz) {
      throw bands.error("high_hz", "band '" + band.label + "' exceeds +-sample_rate_hz/2");
    }
    c.bands.push_back(band);
    checked(bands, "regions", [&] { c.band_regions.push_back(region_from_string(regions[b])); });
  }
  bands.finish();

  SectionReader grids(doc, "grids", source, true);
  c.angle_min_deg = grids.number("angle_min_deg", c.angle_min_deg);
  c.angle_max_deg = grids.number("angle_max_deg", c.angle_max_deg);
  c.angle_step_deg = grids.number("angle_step_deg", c.angle_step_deg);
  c.phase_steps = static_cast<int>(grids.integer("phase_steps", c.phase_steps));
  c.rbw_hz = grids.number("rbw_hz", c.rbw_hz);
  c.theta_deg = grids.number("theta_deg", c.theta_deg);
  c.steering_deg = grids.numbers("steering_deg", {});
  require_positive(grids, "angle_step_deg", c.angle_step_deg);
  require_positive(grids, "rbw_hz", c.rbw_hz);
  if (!std::isfinite(c.angle_min_deg) || !std::isfinite(c.angle_max_deg) || c.angle_max_deg < c.angle_min_deg ||
      c.angle_min_deg < -180.0 || c.angle_max_deg > 180.0) {
    throw grids.error("angle_max_deg", "angle range must lie within [-180, 180] with min <= max");
  }
  if (c.phase_steps < kMinPhaseSteps) throw grids.error("phase_steps", "must be at least " + std::to_string(kMinPhaseSteps));
  if (!std::isfinite(c.theta_deg) || c.theta_deg < 0.0 || c.theta_deg > 180.0) throw grids.error("theta_deg", "must lie in [0, 180]");
  for (double s : c.steering_deg) {
    if (!std::isfinite(s) || std::abs(s) > 90.0) throw grids.error("steering_deg", "must lie in [-90, 90]");
  }
  if (static_cast<double>(c.num_samples) < 2.0 * c.sample_rate_hz / c.rbw_hz) {
    throw grids.error("rbw_hz", "needs users.num_samples >= 2 * sample_rate_hz / rbw_hz");
  }
  grids.finish();

  SectionReader margins(doc, "margins", source, false);
  c.margins.in_band_db = margins.number("in_band_db", c.margins.in_band_db);
  c.margins.oob_db = margins.number("oob_db", c.margins.oob_db);
  checked(margins, "in_band_db", [&] { c.margins.validate(); });
  margins.finish();

  SectionReader seed(doc, "seed", source, true);
  const std::int64_t master = seed.integer("master");
  if (master < 0) throw seed.error("master", "must be >= 0");
  c.seed = static_cast<std::uint64_t>(master);
  seed.finish();

  SectionReader validate(doc, "validate", source, false);
  c.inject_envelope_offset_db = validate.number("inject_envelope_offset_db", 0.0);
  require_finite_value(validate, "inject_envelope_offset_db", c.inject_envelope_offset_db);
  validate.finish();

  return c;
}

std::string list(const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + format_double(values[i]);
  return s + "]";
}

std::string list(const std::vector<std::string>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", \"" : "\"") + values[i] + "\"";
  return s + "]";
}

}  // namespace

int ScenarioConfig::band_for_region(SpectralRegion region) const {
  for (std::size_t b = 0; b < band_regions.size(); ++b) {
    if (band_regions[b] == region) return static_cast<int>(b);
  }
  return -1;
}

ScenarioConfig parse_config(const std::string& text, const std::string& source,
                            const std::vector<std::string>& overrides) {
  Document doc = parse_document(text, source);
  for (const auto& o : overrides) apply_override(doc, o);
  return build(doc, source);
}

ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string(), overrides);
}

std::string dump_config(const ScenarioConfig& c) {
  std::ostringstream o;
  o << "[scenario]\nname = \"" << c.name << "\"\n\n";
  o << "[pattern]\ngain_dbi = " << format_double(c.pattern.gain_dbi) << "\nhpbw_deg = " << format_double(c.pattern.hpbw_deg)
    << "\nfront_to_back_db = " << format_double(c.pattern.front_to_back_db) << "\n\n";
  o << "[geometry]\n";
  if (const auto* a = std::get_if<TwoElementArray<double>>(&c.geometry)) {
    o << "type = \"two_element\"\nspacing_wavelengths = " << format_double(a->spacing_wavelengths) << "\n\n";
  } else {
    const auto& g = std::get<ArrayGeometry<double>>(c.geometry);
    o << "type = \"aas\"\nrows = " << g.rows << "\ncols = " << g.cols
      << "\nvertical_spacing_wavelengths = " << format_double(g.vertical_spacing_wavelengths)
      << "\nhorizontal_spacing_wavelengths = " << format_double(g.horizontal_spacing_wavelengths)
      << "\npolarizations = " << g.polarizations << "\n\n";
  }
  o << "[pa]\nalpha = " << format_double(c.pa.alpha.real()) << "\nalpha_imag = " << format_double(c.pa.alpha.imag())
    << "\nnoise_power_dbm = " << format_double(c.pa.noise_power_dbm) << "\n";
  if (c.target_aclr_db) o << "target_aclr_db = " << format_double(*c.target_aclr_db) << "\n";
  o << "\n";
  std::vector<double> powers, steer;
  for (const auto& u : c.users) {
    powers.push_back(u.power_dbm);
    steer.push_back(u.steer_deg);
  }
  o << "[users]\nbandwidth_hz = " << format_double(c.bandwidth_hz) << "\nsample_rate_hz = " << format_double(c.sample_rate_hz)
    << "\nnum_samples = " << c.num_samples << "\ncarrier_hz = " << format_double(c.carrier_hz)
    << "\npower_dbm = " << list(powers) << "\nsteer_deg = " << list(steer) << "\n\n";
  std::vector<std::string> labels, regions;
  std::vector<double> lows, highs;
  for (std::size_t b = 0; b < c.bands.size(); ++b) {
    labels.push_back(c.bands[b].label);
    lows.push_back(c.bands[b].f_low_hz);
    highs.push_back(c.bands[b].f_high_hz);
    regions.push_back(to_string(c.band_regions[b]));
  }
  o << "[bands]\nlabels = " << list(labels) << "\nlow_hz = " << list(lows) << "\nhigh_hz = " << list(highs)
    << "\nregions = " << list(regions) << "\n\n";
  o << "[grids]\nangle_min_deg = " << format_double(c.angle_min_deg) << "\nangle_max_deg = " << format_double(c.angle_max_deg)
    << "\nangle_step_deg = " << format_double(c.angle_step_deg) << "\nphase_steps = " << c.phase_steps
    << "\nrbw_hz = " << format_double(c.rbw_hz) << "\ntheta_deg = " << format_double(c.theta_deg)
    << "\nsteering_deg = " << list(c.steering_deg) << "\n\n";
  o << "[margins]\nin_band_db = " << format_double(c.margins.in_band_db) << "\noob_db = " << format_double(c.margins.oob_db)
    << "\n\n";
  o << "[seed]\nmaster = " << c.seed << "\n\n";
  o << "[validate]\ninject_envelope_offset_db = " << format_double(c.inject_envelope_offset_db) << "\n";
  return o.str();
}

FarFieldScenario to_scenario(const ScenarioConfig& c, std::uint64_t budget_samples) {
  FarFieldScenario s;
  s.geometry = c.geometry;
  s.pattern = c.pattern;
  s.pa = c.pa;
  s.bandwidth_hz = c.bandwidth_hz;
  s.sample_rate_hz = c.sample_rate_hz;
  s.num_samples = static_cast<Eigen::Index>(c.num_samples);
  s.users = c.users;
  s.theta_deg = c.theta_deg;
  s.angles_deg = angle_grid(c.angle_min_deg, c.angle_max_deg, c.angle_step_deg);
  s.phase_steps = c.phase_steps;
  s.rbw_hz = c.rbw_hz;
  s.bands = c.bands;
  s.seed = c.seed;
  s.budget_samples = budget_samples;
  return s;
}

}  // namespace aasbound
