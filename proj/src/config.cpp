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

#include "panelbeam/config.hpp"

#include "panelbeam/errors.hpp"

#include <cmath>
#include <string>

namespace panelbeam
{

void SystemConfig::validate() const
{
    if (n_a < 1)
        throw ConfigError("n_a must be a positive integer");
    if (n_p < 1)
        throw ConfigError("n_p must be a positive integer");
    if (num_paths < 2)
        throw ConfigError("num_paths must be at least 2 (one LoS plus one NLoS path)");
    if (!(rician_k >= 0.0) || !std::isfinite(rician_k))
        throw ConfigError("rician_k must be a finite nonnegative value");
    if (!(tx_snr > 0.0) || !std::isfinite(tx_snr))
        throw ConfigError("tx_snr must be a finite positive value");
    if (!(p_min >= 0.0 && p_max <= 1.0 && p_min <= p_max))
        throw ConfigError("blockage bounds must satisfy 0 <= p_min <= p_max <= 1");
    if (!(carrier_hz > 0.0) || !(bandwidth_hz > 0.0))
        throw ConfigError("carrier_hz and bandwidth_hz must be positive");
}

PathStatistics path_variances(double kappa, int num_paths)
{
    if (num_paths < 2)
        throw ConfigError("num_paths must be at least 2, got " + std::to_string(num_paths));
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw ConfigError("Rician K-factor must be finite and nonnegative");

    PathStatistics stats;
    stats.variances.assign(static_cast<std::size_t>(num_paths),
                           1.0 / ((kappa + 1.0) * static_cast<double>(num_paths - 1)));
    stats.variances[0] = kappa / (kappa + 1.0);
    return stats;
}

SystemConfig default_config()
{
    SystemConfig cfg;
    cfg.n_a = 32;
    cfg.n_p = 8;
    cfg.num_paths = 4;
    cfg.rician_k = db_to_linear(10.0);
    cfg.tx_snr = db_to_linear(10.0);
    cfg.p_min = 0.2;
    cfg.p_max = 0.6;
    return cfg;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

} // namespace panelbeam
