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

#ifndef AASBOUND_IO_HPP
#define AASBOUND_IO_HPP

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "aasbound/envelope.hpp"
#include "aasbound/oracle.hpp"
#include "aasbound/spectral.hpp"

namespace aasbound {

/// Shortest text that parses back to the same double ("-inf" for -infinity).
std::string format_double(double value);
/// Fixed-point with `decimals` digits; used for CSV columns.
std::string format_fixed(double value, int decimals = 6);
/// Parses a complete string as a double; accepts "inf" / "-inf".
double parse_double(const std::string& text);

/// angle_deg,value_db,label
void write_cuts_csv(std::ostream& out, std::span<const AngularCut> cuts);
std::vector<AngularCut> read_cuts_csv(const std::filesystem::path& path);

/// Header row carrying rbw and carrier, then freq_hz,psd_dbm_per_rbw.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum, double carrier_hz);

/// regions per bin: freq_hz,region
void write_regions_csv(std::ostream& out, const Spectrum& grid, std::span<const SpectralRegion> regions);

/// angle_deg,band_label,max_dbm
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace aasbound

#endif  // AASBOUND_IO_HPP
