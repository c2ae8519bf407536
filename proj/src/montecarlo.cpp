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

#include "panelbeam/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace panelbeam
{

const char* to_string(SimulationMode mode)
{
    return mode == SimulationMode::idealized ? "idealized" : "realistic";
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(std::move(samples))
{
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const
{
    if (sorted_.empty())
        return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::below(double x) const
{
    if (sorted_.empty())
        return 0.0;
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

namespace
{

struct ChunkSums
{
    double se = 0.0;
    double rsnr = 0.0;
};

} // namespace

TrialBatchResult run_trials(const SystemConfig& cfg, const PanelAllocation& alloc, std::span<const double> aods,
                            SimulationMode mode, std::size_t n_trials, std::uint64_t seed,
                            const TrialOptions& options)
{
    if (n_trials < 1)
        throw std::invalid_argument("run_trials: need at least one trial");
    if (options.chunk_size < 1)
        throw std::invalid_argument("run_trials: chunk_size must be positive");
    cfg.validate();
    alloc.check_against(cfg);

    const auto L = static_cast<std::size_t>(cfg.num_paths);
    const auto variances = path_variances(cfg.rician_k, cfg.num_paths).variances;

    // h_eq = sum_l sqrt(b_l) conj(g_l) a_eq[l]; only a_eq and the blocked factor differ between modes.
    ComplexVector a_eq(L);
    std::vector<double> blocked_factor(L, 0.0);
    BlockageCorrelation correlation = BlockageCorrelation::per_path;
    if (mode == SimulationMode::idealized)
    {
        const auto approx = equivalent_array_response_approx(alloc, cfg);
        std::copy(approx.begin(), approx.end(), a_eq.begin());
    }
    else
    {
        if (aods.size() != L)
            throw std::invalid_argument("run_trials: realistic mode needs one AoD per path");
        a_eq = equivalent_array_response_exact(aods, build_beamformer(alloc, aods, cfg));
        const auto hpbw = beam_hpbw_deg(alloc, cfg);
        for (std::size_t l = 0; l < L; ++l)
            blocked_factor[l] = 1.0 / blockage_attenuation(hpbw[l]);
        correlation = options.correlation;
    }

    TrialBatchResult result;
    result.se_samples.resize(n_trials);
    result.trials = n_trials;
    result.seed = seed;
    result.mode = mode;
    result.aods.assign(aods.begin(), aods.end());

    const std::size_t n_chunks = (n_trials + options.chunk_size - 1) / options.chunk_size;
    std::vector<ChunkSums> sums(n_chunks);

    auto run_chunk = [&](std::size_t chunk) {
        Rng rng = make_stream(seed, trial_chunk_base + chunk);
        std::vector<std::complex<double>> gains(L);
        std::vector<double> blockage(L);
        const std::size_t begin = chunk * options.chunk_size;
        const std::size_t end = std::min(n_trials, begin + options.chunk_size);
        ChunkSums acc;
        for (std::size_t t = begin; t < end; ++t)
        {
            sample_gains(variances, gains, rng);
            sample_blockage_into(cfg, blocked_factor, correlation, rng, blockage);
            std::complex<double> h{0.0, 0.0};
            for (std::size_t l = 0; l < L; ++l)
                h += std::sqrt(blockage[l]) * std::conj(gains[l]) * a_eq[l];
            const double gamma = cfg.tx_snr * std::norm(h);
            const double se = std::log2(1.0 + gamma);
            result.se_samples[t] = se;
            acc.se += se;
            acc.rsnr += gamma;
        }
        sums[chunk] = acc;
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
    if (threads <= 1)
    {
        for (std::size_t c = 0; c < n_chunks; ++c)
            run_chunk(c);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < n_chunks; c = next++)
                    run_chunk(c);
            });
    }

    // merge in chunk order so the means do not depend on scheduling
    double se_total = 0.0;
    double rsnr_total = 0.0;
    for (const auto& s : sums)
    {
        se_total += s.se;
        rsnr_total += s.rsnr;
    }
    result.mean_se = se_total / static_cast<double>(n_trials);
    result.mean_rsnr = rsnr_total / static_cast<double>(n_trials);
    result.empirical_cdf = EmpiricalCdf(result.se_samples);
    return result;
}

double empirical_outage(const TrialBatchResult& result, double target_se)
{
    return result.empirical_cdf.below(target_se);
}

double ks_distance(const EmpiricalCdf& cdf, const RsnrMixture& mix)
{
    const auto xs = cdf.sorted();
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    std::size_t i = 0;
    while (i < xs.size())
    {
        // group equal samples so the empirical jump is taken once
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i])
            ++j;
        const double x = xs[i];
        const double f = mix.cdf(se_to_rsnr(std::max(x, 0.0)));
        const double f_left = x <= 0.0 ? 0.0 : f; // atom sits at zero, continuous elsewhere
        d = std::max({d, std::abs(static_cast<double>(j) / n - f), std::abs(static_cast<double>(i) / n - f_left)});
        i = j;
    }
    // beyond the largest sample the empirical CDF is 1
    return d;
}

} // namespace panelbeam
