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
#include <functional>
#include <string_view>
#include <vector>

namespace panelbeam
{

struct EnumerationOptions
{
    // Every candidate serves the LoS path with at least one panel.
    bool require_los = true;
    // Enumeration refuses search spaces larger than this.
    std::uint64_t capacity = 100'000'000;
};

// Number of allocations of n_p panels over num_paths paths. With require_los:
//   C = sum_{q_1=1}^{N_p} binom(N_p + L - q_1 - 2, L - 2)
// otherwise binom(N_p + L - 1, L - 1). Saturates at UINT64_MAX.
std::uint64_t allocation_count(int n_p, int num_paths, bool require_los = true);

// All allocations in lexicographic order. Throws CapacityError when the count
// exceeds options.capacity.
std::vector<PanelAllocation> enumerate_allocations(int n_p, int num_paths, const EnumerationOptions& options = {});

struct CandidateRow
{
    PanelAllocation allocation;
    double outage = 0.0;
    double avg_rsnr = 0.0;
};

struct AllocationReport
{
    PanelAllocation chosen;
    double outage = 0.0;
    double avg_rsnr = 0.0;
    double g_los = 0.0;
    double min_outage = 0.0;     // smallest outage over all candidates
    std::size_t chosen_index = 0; // row of `chosen` in `candidates`
    std::vector<CandidateRow> candidates; // lexicographic order
};

// Relative tolerance under which two outage or RSNR values count as equal.
inline constexpr double tie_tolerance = 1e-12;

using WarningSink = std::function<void(std::string_view)>;

// Closed-form maximizer of the average RSNR: all panels on the LoS path. The
// answer is cross-checked against every enumerated candidate; when the
// dominance condition kappa (L - 1) > 1 fails or a candidate scores higher,
// a warning is emitted and the enumeration argmax is returned instead.
PanelAllocation maximize_average_se(const SystemConfig& cfg, const WarningSink& warn = {},
                                    const EnumerationOptions& options = {});

// Outage minimization by exhaustive search. Ties on outage go to the higher
// average RSNR, then to the lexicographically smallest allocation.
AllocationReport optimize_outmin(const SystemConfig& cfg, double target_se, const EnumerationOptions& options = {});

// Among candidates whose outage is within epsilon of the minimum, pick the one
// with the largest average RSNR (ties: lexicographically smallest).
AllocationReport optimize_outmin_ase(const SystemConfig& cfg, double target_se, double epsilon,
                                     const EnumerationOptions& options = {});

// Normalized LoS beam gain q_1 / N_p.
double g_los(const PanelAllocation& alloc);

} // namespace panelbeam
