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

#include "panelbeam/analytic.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace panelbeam
{

double RsnrMixture::cdf(double gamma) const
{
    if (gamma < 0.0)
        throw std::domain_error("rsnr cdf: gamma must be nonnegative");
    double f = zero_mass;
    for (const auto& c : components)
        f += c.weight * -std::expm1(-gamma / c.scale);
    return std::min(f, 1.0);
}

double RsnrMixture::pdf(double gamma) const
{
    if (gamma < 0.0)
        return 0.0;
    double f = 0.0;
    for (const auto& c : components)
        f += c.weight / c.scale * std::exp(-gamma / c.scale);
    return f;
}

double RsnrMixture::mean() const
{
    double m = 0.0;
    for (const auto& c : components)
        m += c.weight * c.scale;
    return m;
}

namespace
{

struct SubsetTerm
{
    double weight;
    double variance_sum; // sum of rho_l^2 = sigma_l^2 q_l^2 over unblocked served paths
    std::uint64_t mask;
};

// Walks every nonempty subset S of the served paths with weight
// p^{N_b - |S|} (1 - p)^{|S|}.
template <typename Fn>
void for_each_subset(const PanelAllocation& alloc, const SystemConfig& cfg, Fn&& fn)
{
    alloc.check_against(cfg);
    const auto sigma2 = path_variances(cfg.rician_k, cfg.num_paths).variances;
    const auto served = alloc.support();
    const int n_b = static_cast<int>(served.size());
    if (n_b > 62)
        throw std::invalid_argument("rsnr mixture: too many beams to enumerate");
    const double p = cfg.p_blk();

    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n_b); ++s)
    {
        const int t = std::popcount(s);
        double var = 0.0;
        std::uint64_t mask = 0;
        for (int i = 0; i < n_b; ++i)
        {
            if (s & (std::uint64_t{1} << i))
            {
                const std::size_t l = served[static_cast<std::size_t>(i)];
                const double q = alloc[l];
                var += sigma2[l] * q * q;
                mask |= std::uint64_t{1} << l;
            }
        }
        const double w = std::pow(p, n_b - t) * std::pow(1.0 - p, t);
        fn(SubsetTerm{w, var, mask});
    }
}

double channel_gain(const SystemConfig& cfg)
{
    // N_a^2 / N_t
    return static_cast<double>(cfg.n_a) * cfg.n_a / cfg.n_t();
}

} // namespace

HeqRealDensity heq_pdf_real(const PanelAllocation& alloc, const SystemConfig& cfg, double x)
{
    HeqRealDensity out;
    out.zero_mass = std::pow(cfg.p_blk(), alloc.num_beams());
    const double g = channel_gain(cfg);
    for_each_subset(alloc, cfg, [&](const SubsetTerm& term) {
        const double v = g * term.variance_sum / 2.0;
        if (v <= 0.0)
        {
            out.zero_mass += term.weight;
            return;
        }
        out.density += term.weight * std::exp(-x * x / (2.0 * v)) / std::sqrt(2.0 * std::numbers::pi * v);
    });
    return out;
}

RsnrMixture rsnr_mixture(const PanelAllocation& alloc, const SystemConfig& cfg)
{
    RsnrMixture mix;
    mix.zero_mass = std::pow(cfg.p_blk(), alloc.num_beams());
    const double prefactor = cfg.tx_snr * channel_gain(cfg);
    for_each_subset(alloc, cfg, [&](const SubsetTerm& term) {
        const double scale = prefactor * term.variance_sum;
        if (scale <= 0.0)
            mix.zero_mass += term.weight;
        else
            mix.components.push_back({term.weight, scale, term.mask});
    });
    return mix;
}

double rsnr_cdf(const RsnrMixture& mix, double gamma) { return mix.cdf(gamma); }

double se_to_rsnr(double se) { return std::exp2(se) - 1.0; }

double outage_probability(const RsnrMixture& mix, double target_se)
{
    if (target_se < 0.0)
        throw std::domain_error("outage_probability: target SE must be nonnegative");
    return mix.cdf(se_to_rsnr(target_se));
}

double outage_probability(const PanelAllocation& alloc, const SystemConfig& cfg, double target_se)
{
    return outage_probability(rsnr_mixture(alloc, cfg), target_se);
}

double average_rsnr(const PanelAllocation& alloc, const SystemConfig& cfg)
{
    alloc.check_against(cfg);
    const double kappa = cfg.rician_k;
    const double paths_m1 = cfg.num_paths - 1;
    double weighted = kappa * paths_m1 * alloc[0] * alloc[0];
    for (std::size_t l = 1; l < alloc.num_paths(); ++l)
        weighted += static_cast<double>(alloc[l]) * alloc[l];
    return cfg.tx_snr * channel_gain(cfg) * (1.0 - cfg.p_blk()) / ((kappa + 1.0) * paths_m1) * weighted;
}

double average_se_upper_bound(const PanelAllocation& alloc, const SystemConfig& cfg)
{
    return std::log2(1.0 + average_rsnr(alloc, cfg));
}

} // namespace panelbeam
