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

#include "aasbound/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aasbound {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf.data(), end);
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  std::string s(buf.data(), end);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

double parse_double(const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

void write_cuts_csv(std::ostream& out, std::span<const AngularCut> cuts) {
  out << "angle_deg,value_db,label\n";
  for (const auto& cut : cuts) {
    cut.validate();
    for (Eigen::Index i = 0; i < cut.size(); ++i) {
      out << format_fixed(cut.angles_deg(i), 4) << ',' << format_fixed(cut.values_db(i)) << ',' << cut.label << '\n';
    }
  }
}

std::vector<AngularCut> read_cuts_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  if (line != "angle_deg,value_db,label") throw std::runtime_error(path.string() + ": unexpected header");
  std::vector<AngularCut> cuts;
  std::vector<std::vector<double>> angles, values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw std::runtime_error(path.string() + ": bad row");
    const std::string label = line.substr(c2 + 1);
    if (cuts.empty() || cuts.back().label != label) {
      cuts.push_back(AngularCut{{}, {}, label});
      angles.emplace_back();
      values.emplace_back();
    }
    angles.back().push_back(parse_double(line.substr(0, c1)));
    values.back().push_back(parse_double(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    cuts[k].angles_deg = Eigen::Map<const Eigen::VectorXd>(angles[k].data(), static_cast<Eigen::Index>(angles[k].size()));
    cuts[k].values_db = Eigen::Map<const Eigen::VectorXd>(values[k].data(), static_cast<Eigen::Index>(values[k].size()));
  }
  return cuts;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum, double carrier_hz) {
  out << "# rbw_hz=" << format_double(spectrum.rbw_hz) << " carrier_hz=" << format_double(carrier_hz) << '\n';
  out << "freq_hz,psd_dbm_per_rbw\n";
  for (Eigen::Index k = 0; k < spectrum.bins(); ++k) {
    out << format_fixed(spectrum.bin_freqs_hz(k), 1) << ',' << format_fixed(spectrum.psd_dbm(k)) << '\n';
  }
}

void write_regions_csv(std::ostream& out, const Spectrum& grid, std::span<const SpectralRegion> regions) {
  if (static_cast<Eigen::Index>(regions.size()) != grid.bins()) throw std::invalid_argument("one region per bin");
  out << "freq_hz,region\n";
  for (Eigen::Index k = 0; k < grid.bins(); ++k) {
    out << format_fixed(grid.bin_freqs_hz(k), 1) << ',' << to_string(regions[static_cast<std::size_t>(k)]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "angle_deg,band_label,max_dbm\n";
  for (std::size_t b = 0; b < sweep.band_labels.size(); ++b) {
    const Eigen::VectorXd max = sweep.max_over_sweep(b);
    for (Eigen::Index j = 0; j < sweep.angles_deg.size(); ++j) {
      out << format_fixed(sweep.angles_deg(j), 4) << ',' << sweep.band_labels[b] << ',' << format_fixed(max(j)) << '\n';
    }
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace aasbound
