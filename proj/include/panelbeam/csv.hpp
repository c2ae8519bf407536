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

#include "panelbeam/analytic.hpp"
#include "panelbeam/beamforming.hpp"
#include "panelbeam/montecarlo.hpp"
#include "panelbeam/optimizer.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace panelbeam
{

// Plain CSV writer: `# ` comment lines, one header row, then data rows.
// Numbers are written with 10 significant digits in the classic locale so
// output is byte-stable across runs.
class CsvWriter
{
public:
    explicit CsvWriter(std::ostream& out);

    CsvWriter& comment(const std::string& text);
    CsvWriter& header(const std::vector<std::string>& columns);

    CsvWriter& cell(double value);
    CsvWriter& cell(long long value);
    CsvWriter& cell(int value) { return cell(static_cast<long long>(value)); }
    CsvWriter& cell(std::size_t value) { return cell(static_cast<long long>(value)); }
    CsvWriter& cell(const std::string& value);
    CsvWriter& cell(const char* value) { return cell(std::string(value)); }
    CsvWriter& end_row();

private:
    std::ostream& out_;
    bool row_started_ = false;
};

std::string format_number(double value);

// theta_deg, gain_abs
void export_beam_pattern(std::ostream& out, const std::string& comment, std::span<const double> grid_rad,
                         std::span<const double> gain);

// se_bits, cdf_analytic
void export_cdf_curve(std::ostream& out, const std::string& comment, const RsnrMixture& mix,
                      std::span<const double> se_grid);

// q_1..q_L, outage, avg_rsnr_db, chosen
void export_candidates(std::ostream& out, const std::string& comment, const AllocationReport& report);

// trial, se_bits
void export_samples(std::ostream& out, const std::string& comment, const TrialBatchResult& result);

// mode, trials, seed, mean_se, mean_rsnr_db
void export_summary(std::ostream& out, const std::string& comment, std::span<const TrialBatchResult> results);

} // namespace panelbeam
