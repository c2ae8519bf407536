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

#include <compare>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace panelbeam
{

using ComplexVector = std::vector<std::complex<double>>;

// Number of panels steered towards each path.
class PanelAllocation
{
public:
    PanelAllocation() = default;

    // Throws std::invalid_argument on negative counts or an all-zero vector.
    explicit PanelAllocation(std::vector<int> counts);

    std::span<const int> counts() const { return counts_; }
    int operator[](std::size_t l) const { return counts_[l]; }
    std::size_t num_paths() const { return counts_.size(); }
    int num_panels() const;
    // Number of distinct beams, ||q||_0.
    int num_beams() const;
    // Indices of paths that receive at least one panel, ascending.
    std::vector<std::size_t> support() const;

    // Throws ConfigError unless the allocation uses exactly cfg.n_p panels over cfg.num_paths paths.
    void check_against(const SystemConfig& cfg) const;

    // "[8,0,0,0]"
    std::string to_string() const;
    // Parses "8,0,0,0" or "[8,0,0,0]".
    static PanelAllocation parse(const std::string& text);

    friend auto operator<=>(const PanelAllocation&, const PanelAllocation&) = default;

private:
    std::vector<int> counts_;
};

// All panels on the LoS path.
PanelAllocation los_concentration(const SystemConfig& cfg);
// floor(N_p/L) panels per path; the remainder goes one per path from the LoS path on.
PanelAllocation uniform_allocation(const SystemConfig& cfg);

// Stacked multi-panel analog beamformer.
struct Beamformer
{
    ComplexVector weights;            // length N_t, every entry of magnitude 1/sqrt(N_t)
    std::vector<double> directivities; // steering angle per panel
};

// a(n, theta): entry k is exp(j*pi*k*cos(theta)).
ComplexVector array_response(int n, double theta);

// Panels are assigned to paths in path order: the first q_0 panels steer to
// aods[0], the next q_1 to aods[1], and so on. Panel m carries the phase
// exp(j*pi*m*N_a*cos(phi_m)) so co-steered panels add coherently.
Beamformer build_beamformer(const PanelAllocation& alloc, std::span<const double> aods,
                            const SystemConfig& cfg);

// |a(N_t, theta)^H f| on each grid angle.
std::vector<double> beam_pattern(const Beamformer& bf, std::span<const double> grid);

// a_eq[l] = a(N_t, theta_l)^H f.
ComplexVector equivalent_array_response_exact(std::span<const double> aods, const Beamformer& bf);

// Main-lobe approximation of the equivalent response: (N_a / sqrt(N_t)) * q.
std::vector<double> equivalent_array_response_approx(const PanelAllocation& alloc, const SystemConfig& cfg);

// Half-power beam width of the beam serving each path, 102 deg / (q_l N_a).
// Paths with no panels get the full-array width 102 deg / N_t.
std::vector<double> beam_hpbw_deg(const PanelAllocation& alloc, const SystemConfig& cfg);

} // namespace panelbeam
