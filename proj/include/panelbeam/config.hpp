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

#include <vector>

namespace panelbeam
{

// All scenario parameters of a multi-panel downlink.
// Linear scale throughout; dB conversion happens when scenarios are parsed.
struct SystemConfig
{
    int n_a = 32;         // antenna elements per panel
    int n_p = 8;          // panels
    int num_paths = 4;    // L; path 0 is LoS, the rest NLoS
    double rician_k = 10.0;
    double tx_snr = 10.0; // P_tx / sigma_z^2
    double p_min = 0.2;
    double p_max = 0.6;

    // Metadata only.
    double carrier_hz = 28e9;
    double bandwidth_hz = 400e6;

    int n_t() const { return n_a * n_p; }
    double p_blk() const { return (p_min + p_max) / 2.0; }

    // Throws ConfigError when an invariant is violated.
    void validate() const;
};

// Per-path gain variances. Entries sum to one.
struct PathStatistics
{
    std::vector<double> variances;
};

PathStatistics path_variances(double kappa, int num_paths);

// N_a=32, N_p=8, L=4, kappa=10 dB, SNR=10 dB, p_hat ~ U(0.2, 0.6).
SystemConfig default_config();

double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace panelbeam
