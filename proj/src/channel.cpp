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

#include "panelbeam/channel.hpp"

#include "panelbeam/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace panelbeam
{

double default_min_separation(const SystemConfig& cfg)
{
    const double hpbw_rad = 102.0 * std::numbers::pi / 180.0;
    return 4.0 * hpbw_rad / static_cast<double>(cfg.n_t());
}

double beamspace_distance(double theta_a, double theta_b)
{
    const double d = std::abs(std::cos(theta_a) - std::cos(theta_b));
    return std::min(d, 2.0 - d);
}

std::vector<double> sample_aods(int num_paths, double min_separation, Rng& rng)
{
    if (num_paths < 1)
        throw std::invalid_argument("sample_aods: num_paths must be positive");
    // beamspace is a circle of circumference 2
    if (min_separation < 0.0 || min_separation * num_paths >= 2.0)
        throw std::invalid_argument("sample_aods: min_separation * num_paths must be below 2");

    constexpr int max_restarts = 1000;
    constexpr int max_tries_per_path = 1000;
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);

    std::vector<double> aods;
    aods.reserve(static_cast<std::size_t>(num_paths));
    for (int restart = 0; restart < max_restarts; ++restart)
    {
        aods.clear();
        for (int l = 0; l < num_paths; ++l)
        {
            bool placed = false;
            for (int attempt = 0; attempt < max_tries_per_path && !placed; ++attempt)
            {
                const double theta = angle(rng);
                bool ok = true;
                for (double other : aods)
                    ok = ok && beamspace_distance(theta, other) >= min_separation;
                if (ok)
                {
                    aods.push_back(theta);
                    placed = true;
                }
            }
            if (!placed)
                break;
        }
        if (static_cast<int>(aods.size()) == num_paths)
            return aods;
    }
    throw SamplingError("sample_aods: no geometry with separation " + std::to_string(min_separation) +
                        " found for " + std::to_string(num_paths) + " paths");
}

void sample_gains(std::span<const double> variances, std::span<std::complex<double>> gains, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t l = 0; l < gains.size(); ++l)
    {
        const double sd = std::sqrt(variances[l] / 2.0);
        const double re = normal(rng);
        const double im = normal(rng);
        gains[l] = {sd * re, sd * im};
    }
}

ChannelRealization sample_channel(const SystemConfig& cfg, double min_separation, Rng& rng)
{
    cfg.validate();
    const auto stats = path_variances(cfg.rician_k, cfg.num_paths);
    const auto L = static_cast<std::size_t>(cfg.num_paths);

    ChannelRealization ch;
    ch.aods = sample_aods(cfg.num_paths, min_separation, rng);
    ch.gains.resize(L);
    sample_gains(stats.variances, ch.gains, rng);
    ch.blockage.assign(L, 1.0);
    return ch;
}

double blockage_attenuation(double hpbw_deg)
{
    if (!(hpbw_deg > 0.0))
        throw std::invalid_argument("half-power beam width must be positive");
    return 9.8 + 180.0 / hpbw_deg;
}

void sample_blockage_into(const SystemConfig& cfg, std::span<const double> blocked_factor,
                          BlockageCorrelation correlation, Rng& rng, std::span<double> out)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double span = cfg.p_max - cfg.p_min;
    double p_hat = cfg.p_min + span * unit(rng);
    for (std::size_t l = 0; l < out.size(); ++l)
    {
        if (correlation == BlockageCorrelation::per_path && l > 0)
            p_hat = cfg.p_min + span * unit(rng);
        const bool blocked = unit(rng) < p_hat;
        out[l] = blocked ? blocked_factor[l] : 1.0;
    }
}

std::vector<double> sample_blockage(const SystemConfig& cfg, BlockageMode mode,
                                    std::span<const double> hpbw_deg, Rng& rng,
                                    BlockageCorrelation correlation)
{
    const auto L = static_cast<std::size_t>(cfg.num_paths);
    std::vector<double> blocked(L, 0.0);
    if (mode == BlockageMode::realistic)
    {
        if (hpbw_deg.size() != L)
            throw std::invalid_argument("sample_blockage: need one beam width per path");
        for (std::size_t l = 0; l < L; ++l)
            blocked[l] = 1.0 / blockage_attenuation(hpbw_deg[l]);
    }
    std::vector<double> out(L);
    sample_blockage_into(cfg, blocked, correlation, rng, out);
    return out;
}

} // namespace panelbeam
