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
#include "panelbeam/random.hpp"

#include <complex>
#include <span>
#include <vector>

namespace panelbeam
{

enum class BlockageMode
{
    idealized, // blocked path gain is exactly zero
    realistic  // blocked path is attenuated by the beam-width dependent ratio eta
};

// How the per-frame blockage probability p_hat ~ U(p_min, p_max) is shared.
enum class BlockageCorrelation
{
    per_frame, // one p_hat per frame, shared by all paths
    per_path   // an independent p_hat for each path; paths are then i.i.d. Bernoulli(p_blk)
};

// One draw of the propagation geometry and fading.
//
// `blockage` holds the power attenuation of each path: 1 when clear, 0 (idealized)
// or 1/eta (realistic) when blocked. The path gain amplitude is scaled by its
// square root.
struct ChannelRealization
{
    std::vector<double> aods;
    std::vector<std::complex<double>> gains;
    std::vector<double> blockage;
};

// Four half-power beam widths of the full array (102 deg / N_t), in beamspace
// units |cos(a) - cos(b)|.
double default_min_separation(const SystemConfig& cfg);

// Wrapped distance between two directions in beamspace, in [0, 1].
double beamspace_distance(double theta_a, double theta_b);

// AoDs uniform on [0, pi) with every pairwise beamspace distance >= min_separation.
// Throws SamplingError when rejection sampling gives up.
std::vector<double> sample_aods(int num_paths, double min_separation, Rng& rng);

// Fresh AoDs and CN(0, sigma_l^2) gains; blockage is all ones.
ChannelRealization sample_channel(const SystemConfig& cfg, double min_separation, Rng& rng);

// Draws gains into `gains` using standard deviations sqrt(sigma_l^2 / 2) per quadrature.
void sample_gains(std::span<const double> variances, std::span<std::complex<double>> gains, Rng& rng);

// Blocked-path attenuation ratio for a beam of the given half-power width.
double blockage_attenuation(double hpbw_deg);

// One frame of blockage factors. hpbw_deg is only read in realistic mode.
std::vector<double> sample_blockage(const SystemConfig& cfg, BlockageMode mode,
                                    std::span<const double> hpbw_deg, Rng& rng,
                                    BlockageCorrelation correlation = BlockageCorrelation::per_frame);

// Allocation-free variant used by the Monte Carlo engine. `blocked_factor`
// holds the factor applied to each path when it is blocked.
void sample_blockage_into(const SystemConfig& cfg, std::span<const double> blocked_factor,
                          BlockageCorrelation correlation, Rng& rng, std::span<double> out);

} // namespace panelbeam
