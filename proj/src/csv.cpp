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

#include "panelbeam/csv.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace panelbeam
{

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value == 0.0 ? 0.0 : value);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& out)
    : out_(out)
{
}

CsvWriter& CsvWriter::comment(const std::string& text)
{
    out_ << "# " << text << '\n';
    return *this;
}

CsvWriter& CsvWriter::header(const std::vector<std::string>& columns)
{
    for (const auto& c : columns)
        cell(c);
    return end_row();
}

CsvWriter& CsvWriter::cell(const std::string& value)
{
    if (row_started_)
        out_ << ',';
    out_ << value;
    row_started_ = true;
    return *this;
}

CsvWriter& CsvWriter::cell(double value) { return cell(format_number(value)); }

CsvWriter& CsvWriter::cell(long long value) { return cell(std::to_string(value)); }

CsvWriter& CsvWriter::end_row()
{
    out_ << '\n';
    row_started_ = false;
    return *this;
}

void export_beam_pattern(std::ostream& out, const std::string& comment, std::span<const double> grid_rad,
                         std::span<const double> gain)
{
    CsvWriter w(out);
    w.comment(comment).header({"theta_deg", "gain_abs"});
    for (std::size_t i = 0; i < grid_rad.size(); ++i)
        w.cell(grid_rad[i] * 180.0 / std::numbers::pi).cell(gain[i]).end_row();
}

void export_cdf_curve(std::ostream& out, const std::string& comment, const RsnrMixture& mix,
                      std::span<const double> se_grid)
{
    CsvWriter w(out);
    w.comment(comment).header({"se_bits", "cdf_analytic"});
    for (double se : se_grid)
        w.cell(se).cell(mix.cdf(se_to_rsnr(se))).end_row();
}

void export_candidates(std::ostream& out, const std::string& comment, const AllocationReport& report)
{
    CsvWriter w(out);
    w.comment(comment);
    const std::size_t L = report.chosen.num_paths();
    std::vector<std::string> cols;
    for (std::size_t l = 0; l < L; ++l)
        cols.push_back("q_" + std::to_string(l + 1));
    cols.insert(cols.end(), {"outage", "avg_rsnr_db", "chosen"});
    w.header(cols);
    for (std::size_t i = 0; i < report.candidates.size(); ++i)
    {
        const auto& row = report.candidates[i];
        for (int q : row.allocation.counts())
            w.cell(q);
        w.cell(row.outage).cell(10.0 * std::log10(row.avg_rsnr)).cell(i == report.chosen_index ? 1 : 0).end_row();
    }
}

void export_samples(std::ostream& out, const std::string& comment, const TrialBatchResult& result)
{
    CsvWriter w(out);
    w.comment(comment).header({"trial", "se_bits"});
    for (std::size_t t = 0; t < result.se_samples.size(); ++t)
        w.cell(t).cell(result.se_samples[t]).end_row();
}

void export_summary(std::ostream& out, const std::string& comment, std::span<const TrialBatchResult> results)
{
    CsvWriter w(out);
    w.comment(comment).header({"mode", "trials", "seed", "mean_se", "mean_rsnr_db"});
    for (const auto& r : results)
        w.cell(to_string(r.mode))
            .cell(r.trials)
            .cell(std::to_string(r.seed))
            .cell(r.mean_se)
            .cell(10.0 * std::log10(r.mean_rsnr))
            .end_row();
}

} // namespace panelbeam
