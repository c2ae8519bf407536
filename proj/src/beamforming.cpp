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

#include "panelbeam/beamforming.hpp"

#include "panelbeam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace panelbeam
{

PanelAllocation::PanelAllocation(std::vector<int> counts)
    : counts_(std::move(counts))
{
    if (counts_.empty())
        throw std::invalid_argument("panel allocation must cover at least one path");
    if (std::any_of(counts_.begin(), counts_.end(), [](int q) { return q < 0; }))
        throw std::invalid_argument("panel counts must be nonnegative");
    if (num_beams() == 0)
        throw std::invalid_argument("panel allocation must steer at least one panel");
}

int PanelAllocation::num_panels() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int PanelAllocation::num_beams() const
{
    return static_cast<int>(std::count_if(counts_.begin(), counts_.end(), [](int q) { return q > 0; }));
}

std::vector<std::size_t> PanelAllocation::support() const
{
    std::vector<std::size_t> idx;
    for (std::size_t l = 0; l < counts_.size(); ++l)
        if (counts_[l] > 0)
            idx.push_back(l);
    return idx;
}

void PanelAllocation::check_against(const SystemConfig& cfg) const
{
    if (static_cast<int>(counts_.size()) != cfg.num_paths)
        throw ConfigError("allocation " + to_string() + " has " + std::to_string(counts_.size()) +
                          " entries, scenario has " + std::to_string(cfg.num_paths) + " paths");
    if (num_panels() != cfg.n_p)
        throw ConfigError("allocation " + to_string() + " uses " + std::to_string(num_panels()) +
                          " panels, scenario has " + std::to_string(cfg.n_p));
}

std::string PanelAllocation::to_string() const
{
    std::string s = "[";
    for (std::size_t l = 0; l < counts_.size(); ++l)
    {
        if (l)
            s += ',';
        s += std::to_string(counts_[l]);
    }
    return s + "]";
}

PanelAllocation PanelAllocation::parse(const std::string& text)
{
    std::string body = text;
    std::erase_if(body, [](char c) { return c == '[' || c == ']' || c == ' '; });
    std::vector<int> counts;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ','))
    {
        std::size_t used = 0;
        int v = 0;
        try
        {
            v = std::stoi(item, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("cannot parse panel allocation '" + text + "'");
        counts.push_back(v);
    }
    return PanelAllocation(std::move(counts));
}

PanelAllocation los_concentration(const SystemConfig& cfg)
{
    cfg.validate();
    std::vector<int> q(static_cast<std::size_t>(cfg.num_paths), 0);
    q[0] = cfg.n_p;
    return PanelAllocation(std::move(q));
}

PanelAllocation uniform_allocation(const SystemConfig& cfg)
{
    cfg.validate();
    if (cfg.n_p < cfg.num_paths)
        throw ConfigError("uniform allocation needs at least one panel per path (n_p >= num_paths)");
    const int base = cfg.n_p / cfg.num_paths;
    const int extra = cfg.n_p % cfg.num_paths;
    std::vector<int> q(static_cast<std::size_t>(cfg.num_paths), base);
    for (int l = 0; l < extra; ++l)
        ++q[static_cast<std::size_t>(l)];
    return PanelAllocation(std::move(q));
}

ComplexVector array_response(int n, double theta)
{
    if (n < 1)
        throw std::invalid_argument("array_response: n must be positive");
    const double u = std::cos(theta);
    ComplexVector a(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        a[static_cast<std::size_t>(k)] = std::polar(1.0, std::numbers::pi * k * u);
    return a;
}

Beamformer build_beamformer(const PanelAllocation& alloc, std::span<const double> aods, const SystemConfig& cfg)
{
    cfg.validate();
    if (aods.size() != alloc.num_paths())
        throw std::invalid_argument("build_beamformer: " + std::to_string(aods.size()) + " AoDs for " +
                                    std::to_string(alloc.num_paths()) + " allocation entries");
    alloc.check_against(cfg);

    const auto n_a = static_cast<std::size_t>(cfg.n_a);
    const double norm = 1.0 / std::sqrt(static_cast<double>(cfg.n_t()));

    Beamformer bf;
    bf.weights.reserve(static_cast<std::size_t>(cfg.n_t()));
    bf.directivities.reserve(static_cast<std::size_t>(cfg.n_p));
    std::size_t m = 0;
    for (std::size_t l = 0; l < alloc.num_paths(); ++l)
    {
        const double u = std::cos(aods[l]);
        for (int rep = 0; rep < alloc[l]; ++rep, ++m)
        {
            bf.directivities.push_back(aods[l]);
            // psi_m * a(N_a, phi_m) written as one phase ramp over the global element index
            for (std::size_t k = 0; k < n_a; ++k)
            {
                const double global = static_cast<double>(m * n_a + k);
                bf.weights.push_back(std::polar(norm, std::numbers::pi * global * u));
            }
        }
    }
    return bf;
}

namespace
{

std::complex<double> response_inner(double theta, const ComplexVector& f)
{
    // a(N_t, theta)^H f
    const double u = std::cos(theta);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < f.size(); ++k)
        acc += std::polar(1.0, -std::numbers::pi * static_cast<double>(k) * u) * f[k];
    return acc;
}

} // namespace

std::vector<double> beam_pattern(const Beamformer& bf, std::span<const double> grid)
{
    if (grid.empty())
        throw std::invalid_argument("beam_pattern: empty angle grid");
    std::vector<double> out;
    out.reserve(grid.size());
    for (double theta : grid)
        out.push_back(std::abs(response_inner(theta, bf.weights)));
    return out;
}

ComplexVector equivalent_array_response_exact(std::span<const double> aods, const Beamformer& bf)
{
    ComplexVector out;
    out.reserve(aods.size());
    for (double theta : aods)
        out.push_back(response_inner(theta, bf.weights));
    return out;
}

std::vector<double> equivalent_array_response_approx(const PanelAllocation& alloc, const SystemConfig& cfg)
{
    const double gain = cfg.n_a / std::sqrt(static_cast<double>(cfg.n_t()));
    std::vector<double> out;
    out.reserve(alloc.num_paths());
    for (int q : alloc.counts())
        out.push_back(gain * q);
    return out;
}

std::vector<double> beam_hpbw_deg(const PanelAllocation& alloc, const SystemConfig& cfg)
{
    std::vector<double> out;
    out.reserve(alloc.num_paths());
    for (int q : alloc.counts())
        out.push_back(q > 0 ? 102.0 / (q * cfg.n_a) : 102.0 / cfg.n_t());
    return out;
}

} // namespace panelbeam
