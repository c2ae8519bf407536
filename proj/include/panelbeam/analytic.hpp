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

#include "panelbeam/beamforming.hpp"
#include "panelbeam/config.hpp"

#include <cstdint>
#include <vector>

namespace panelbeam
{

// One exponential component of the RSNR distribution. `paths` is a bit mask
// of the unblocked paths that produce it.
struct MixtureComponent
{
    double weight = 0.0;
    double scale = 0.0; // mean RSNR of this component
    std::uint64_t paths = 0;
};

// RSNR distribution under the main-lobe approximation: a point mass at zero
// (every served path blocked) plus one exponential per nonempty set of
// unblocked served paths.
struct RsnrMixture
{
    double zero_mass = 0.0;
    std::vector<MixtureComponent> components;

    double cdf(double gamma) const;
    // Density of the continuous part; the atom at zero is excluded.
    double pdf(double gamma) const;
    double mean() const;
};

// Bernoulli-Gaussian mixture of the equivalent channel, restricted to the
// real part. Each complex component of variance v contributes N(0, v/2).
struct HeqRealDensity
{
    double density = 0.0;   // continuous part at x
    double zero_mass = 0.0; // weight of the delta at the origin
};

HeqRealDensity heq_pdf_real(const PanelAllocation& alloc, const SystemConfig& cfg, double x);

// Subsets are enumerated over the support of q only. Components whose scale
// is zero (possible when kappa = 0) are folded into zero_mass.
RsnrMixture rsnr_mixture(const PanelAllocation& alloc, const SystemConfig& cfg);

// Throws std::domain_error for negative gamma.
double rsnr_cdf(const RsnrMixture& mix, double gamma);

// 2^se - 1
double se_to_rsnr(double se);

// Pr{log2(1 + gamma) < target_se}
double outage_probability(const PanelAllocation& alloc, const SystemConfig& cfg, double target_se);
double outage_probability(const RsnrMixture& mix, double target_se);

// Closed-form E[gamma]:
//   tx_snr N_a^2 (1 - p_blk) / (N_t (kappa + 1)(L - 1)) * (kappa (L - 1) q_1^2 + q_2^2 + ... + q_L^2)
double average_rsnr(const PanelAllocation& alloc, const SystemConfig& cfg);

// Jensen bound log2(1 + E[gamma]) on the average spectral efficiency.
double average_se_upper_bound(const PanelAllocation& alloc, const SystemConfig& cfg);

} // namespace panelbeam
