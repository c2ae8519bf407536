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

// Reference computations for tests. Everything here is derived directly from
// the model definitions (blockage patterns, compositions, expectations) and
// deliberately shares no code path with the library routines it checks.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle
{

struct Scenario
{
    int n_a;
    int n_p;
    double kappa;
    double tx_snr;
    double p_blk;
};

inline std::vector<double> variances(double kappa, int L)
{
    std::vector<double> v(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l)
        v[static_cast<std::size_t>(l)] = l == 0 ? kappa / (kappa + 1.0) : 1.0 / ((kappa + 1.0) * (L - 1));
    return v;
}

// Pr{gamma <= g} by summing over all 2^L blockage patterns of every path
// (served or not). Given a pattern, gamma is exponential with mean
// tx_snr N_a^2/N_t sum_{clear l} sigma_l^2 q_l^2, or identically zero.
inline double rsnr_cdf(const Scenario& s, const std::vector<int>& q, double g)
{
    const int L = static_cast<int>(q.size());
    const auto var = variances(s.kappa, L);
    const double n_t = static_cast<double>(s.n_a) * s.n_p;
    double total = 0.0;
    for (std::uint32_t pattern = 0; pattern < (1u << L); ++pattern)
    {
        double prob = 1.0;
        double mean = 0.0;
        for (int l = 0; l < L; ++l)
        {
            const bool clear = pattern & (1u << l);
            prob *= clear ? 1.0 - s.p_blk : s.p_blk;
            if (clear)
                mean += var[static_cast<std::size_t>(l)] * q[static_cast<std::size_t>(l)] * q[static_cast<std::size_t>(l)];
        }
        mean *= s.tx_snr * s.n_a * s.n_a / n_t;
        total += prob * (mean > 0.0 ? 1.0 - std::exp(-g / mean) : 1.0);
    }
    return total;
}

// E[gamma] = sum over blockage patterns of Pr(pattern) * E[gamma | pattern].
inline double average_rsnr(const Scenario& s, const std::vector<int>& q)
{
    const int L = static_cast<int>(q.size());
    const auto var = variances(s.kappa, L);
    const double n_t = static_cast<double>(s.n_a) * s.n_p;
    double total = 0.0;
    for (std::uint32_t pattern = 0; pattern < (1u << L); ++pattern)
    {
        double prob = 1.0;
        double mean = 0.0;
        for (int l = 0; l < L; ++l)
        {
            const bool clear = pattern & (1u << l);
            prob *= clear ? 1.0 - s.p_blk : s.p_blk;
            if (clear)
                mean += var[static_cast<std::size_t>(l)] * q[static_cast<std::size_t>(l)] * q[static_cast<std::size_t>(l)];
        }
        total += prob * s.tx_snr * s.n_a * s.n_a / n_t * mean;
    }
    return total;
}

// Number of ways to write `total` as an ordered sum of `parts` nonnegative integers.
inline std::uint64_t compositions(int total, int parts)
{
    if (parts == 1)
        return 1;
    std::uint64_t n = 0;
    for (int first = 0; first <= total; ++first)
        n += compositions(total - first, parts - 1);
    return n;
}

// Compositions of n_p into L parts with at least one panel on the first path.
inline std::uint64_t allocations_with_los(int n_p, int L)
{
    std::uint64_t n = 0;
    for (int q1 = 1; q1 <= n_p; ++q1)
        n += compositions(n_p - q1, L - 1);
    return n;
}

// Every allocation with q_1 >= 1, lexicographic, built by recursion.
inline void allocations(int remaining, int L, std::vector<int>& prefix, std::vector<std::vector<int>>& out, bool first)
{
    if (static_cast<int>(prefix.size()) == L - 1)
    {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = first ? 1 : 0; v <= remaining; ++v)
    {
        prefix.push_back(v);
        allocations(remaining - v, L, prefix, out, false);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> all_allocations(int n_p, int L)
{
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    allocations(n_p, L, prefix, out, true);
    return out;
}

} // namespace oracle
