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

#include "panelbeam/optimizer.hpp"

#include "panelbeam/analytic.hpp"
#include "panelbeam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace panelbeam
{
namespace
{

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
    {
        // r * (n - k + i) / i is an integer; divide out common factors first
        std::uint64_t num = n - k + i;
        std::uint64_t den = i;
        const std::uint64_t g1 = std::gcd(r, den);
        r /= g1;
        den /= g1;
        const std::uint64_t g2 = std::gcd(num, den);
        num /= g2;
        den /= g2;
        if (r > saturated / num)
            return saturated;
        r = r * num / den;
    }
    return r;
}

bool nearly_equal(double a, double b)
{
    return std::abs(a - b) <= tie_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_search_args(int n_p, int num_paths)
{
    if (n_p < 1)
        throw ConfigError("allocation search needs n_p >= 1");
    if (num_paths < 2)
        throw ConfigError("allocation search needs num_paths >= 2");
}

std::vector<CandidateRow> evaluate(const SystemConfig& cfg, double target_se, const EnumerationOptions& options)
{
    if (target_se < 0.0)
        throw std::domain_error("target SE must be nonnegative");
    cfg.validate();
    auto allocations = enumerate_allocations(cfg.n_p, cfg.num_paths, options);
    std::vector<CandidateRow> rows;
    rows.reserve(allocations.size());
    for (auto& a : allocations)
    {
        const double out = outage_probability(a, cfg, target_se);
        const double avg = average_rsnr(a, cfg);
        rows.push_back({std::move(a), out, avg});
    }
    return rows;
}

// First row (lexicographic) among `eligible` with the largest average RSNR.
std::size_t best_average(const std::vector<CandidateRow>& rows, const std::vector<std::size_t>& eligible)
{
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i : eligible)
        top = std::max(top, rows[i].avg_rsnr);
    for (std::size_t i : eligible)
        if (rows[i].avg_rsnr >= top || nearly_equal(rows[i].avg_rsnr, top))
            return i;
    return eligible.front();
}

AllocationReport make_report(std::vector<CandidateRow> rows, std::size_t chosen, double min_outage)
{
    AllocationReport r;
    r.chosen = rows[chosen].allocation;
    r.outage = rows[chosen].outage;
    r.avg_rsnr = rows[chosen].avg_rsnr;
    r.g_los = g_los(r.chosen);
    r.min_outage = min_outage;
    r.chosen_index = chosen;
    r.candidates = std::move(rows);
    return r;
}

AllocationReport select_within(std::vector<CandidateRow> rows, double slack)
{
    double p_min = std::numeric_limits<double>::infinity();
    for (const auto& row : rows)
        p_min = std::min(p_min, row.outage);

    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].outage <= p_min + slack || nearly_equal(rows[i].outage, p_min + slack))
            eligible.push_back(i);

    const std::size_t chosen = best_average(rows, eligible);
    return make_report(std::move(rows), chosen, p_min);
}

} // namespace

std::uint64_t allocation_count(int n_p, int num_paths, bool require_los)
{
    check_search_args(n_p, num_paths);
    const auto np = static_cast<std::uint64_t>(n_p);
    const auto L = static_cast<std::uint64_t>(num_paths);
    if (!require_los)
        return binomial(np + L - 1, L - 1);

    std::uint64_t total = 0;
    for (std::uint64_t q1 = 1; q1 <= np; ++q1)
    {
        const std::uint64_t term = binomial(np + L - q1 - 2, L - 2);
        if (term == saturated || total > saturated - term)
            return saturated;
        total += term;
    }
    return total;
}

std::vector<PanelAllocation> enumerate_allocations(int n_p, int num_paths, const EnumerationOptions& options)
{
    const std::uint64_t count = allocation_count(n_p, num_paths, options.require_los);
    if (count > options.capacity)
        throw CapacityError("allocation search over n_p=" + std::to_string(n_p) + ", num_paths=" +
                            std::to_string(num_paths) + " has " +
                            (count == saturated ? std::string("more than 2^64") : std::to_string(count)) +
                            " candidates, above the capacity of " + std::to_string(options.capacity));

    std::vector<PanelAllocation> out;
    out.reserve(static_cast<std::size_t>(count));

    // Odometer over compositions in lexicographic order.
    const auto L = static_cast<std::size_t>(num_paths);
    std::vector<int> q(L, 0);
    const int first_min = options.require_los ? 1 : 0;
    q[0] = first_min;
    q[L - 1] = n_p - first_min;
    while (true)
    {
        out.emplace_back(q);
        // Find the rightmost position (excluding the last) that can be incremented:
        // it needs a positive remainder to its right.
        std::size_t i = L - 1;
        bool advanced = false;
        while (i-- > 0)
        {
            int rest = 0;
            for (std::size_t j = i + 1; j < L; ++j)
                rest += q[j];
            if (rest > 0)
            {
                ++q[i];
                for (std::size_t j = i + 1; j < L; ++j)
                    q[j] = 0;
                q[L - 1] = rest - 1;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
    return out;
}

PanelAllocation maximize_average_se(const SystemConfig& cfg, const WarningSink& warn, const EnumerationOptions& options)
{
    cfg.validate();
    const auto emit = [&](const std::string& msg) {
        if (warn)
            warn(msg);
        else
            std::cerr << "warning: " << msg << '\n';
    };

    const PanelAllocation closed_form = los_concentration(cfg);
    const bool dominant = cfg.rician_k * (cfg.num_paths - 1) > 1.0;

    const auto candidates = enumerate_allocations(cfg.n_p, cfg.num_paths, options);
    const double closed_value = average_rsnr(closed_form, cfg);
    const PanelAllocation* best = &closed_form;
    double best_value = closed_value;
    for (const auto& c : candidates)
    {
        const double v = average_rsnr(c, cfg);
        if (v > best_value && !nearly_equal(v, best_value))
        {
            best = &c;
            best_value = v;
        }
    }

    if (!dominant)
        emit("LoS dominance condition kappa*(L-1) > 1 does not hold; using the enumeration argmax " +
             best->to_string());
    else if (best != &closed_form)
        emit("candidate " + best->to_string() + " beats the LoS concentration on average RSNR");
    return *best;
}

AllocationReport optimize_outmin(const SystemConfig& cfg, double target_se, const EnumerationOptions& options)
{
    return select_within(evaluate(cfg, target_se, options), 0.0);
}

AllocationReport optimize_outmin_ase(const SystemConfig& cfg, double target_se, double epsilon,
                                     const EnumerationOptions& options)
{
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    return select_within(evaluate(cfg, target_se, options), epsilon);
}

double g_los(const PanelAllocation& alloc)
{
    return static_cast<double>(alloc[0]) / alloc.num_panels();
}

} // namespace panelbeam
