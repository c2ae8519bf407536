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
#include "panelbeam/channel.hpp"
#include "panelbeam/config.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace panelbeam
{

enum class SimulationMode
{
    // Main-lobe approximate response and binary, independent per-path blockage:
    // the exact assumptions behind the closed-form distribution.
    idealized,
    // Exact array responses of the built beamformer and beam-width dependent
    // attenuation of blocked paths.
    realistic
};

const char* to_string(SimulationMode mode);

// Sorted sample set.
class EmpiricalCdf
{
public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> samples);

    // Fraction of samples <= x.
    double operator()(double x) const;
    // Fraction of samples < x.
    double below(double x) const;

    std::span<const double> sorted() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }

private:
    std::vector<double> sorted_;
};

struct TrialOptions
{
    // Only used in realistic mode; idealized mode always draws per-path.
    BlockageCorrelation correlation = BlockageCorrelation::per_frame;
    // Trials per independently seeded chunk. Part of the reproducibility contract.
    std::size_t chunk_size = 1 << 14;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct TrialBatchResult
{
    std::vector<double> se_samples; // trial order
    EmpiricalCdf empirical_cdf;
    double mean_se = 0.0;
    double mean_rsnr = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    SimulationMode mode = SimulationMode::idealized;
    std::vector<double> aods;
};

// Per trial, resamples gains and blockage and records log2(1 + gamma).
// Samples are a pure function of (cfg, alloc, aods, mode, n_trials, seed,
// options.correlation, options.chunk_size); thread count does not matter.
TrialBatchResult run_trials(const SystemConfig& cfg, const PanelAllocation& alloc, std::span<const double> aods,
                            SimulationMode mode, std::size_t n_trials, std::uint64_t seed,
                            const TrialOptions& options = {});

// Fraction of samples strictly below target_se.
double empirical_outage(const TrialBatchResult& result, double target_se);

// sup_x |F_n(x) - F(x)| between the empirical SE distribution and the
// closed-form one, accounting for the atom at zero.
double ks_distance(const EmpiricalCdf& cdf, const RsnrMixture& mix);

} // namespace panelbeam
