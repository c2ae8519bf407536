// SPDX-License-Identifier: Apache-2.0
//
// panelbeam: multi-panel analog beamforming under stochastic path blockage
// Copyright (C) 2026 The panelbeam authors
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

#pragma once

#include "panelbeam/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace panelbeam
{

// A scenario file is flat UTF-8 text, one `key = value` per line, `#` starts
// a comment. Required keys:
//   n_a, n_p, num_paths, rician_k_db, tx_snr_db, p_min, p_max, seed
// dB values are converted with linear = 10^(dB/10).
struct Scenario
{
    SystemConfig config;
    std::uint64_t seed = 1;
};

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::filesystem::path& path);

// Writes a file that parse_scenario reads back to the same values.
void write_scenario(std::ostream& out, const Scenario& scenario);

// The default scenario with seed 1.
Scenario default_scenario();

// One-line `key=value ...` rendering used in CSV header comments.
std::string describe(const SystemConfig& cfg, std::uint64_t seed);

} // namespace panelbeam
