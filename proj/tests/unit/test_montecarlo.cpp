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

#include <doctest.h>

#include "oracle.hpp"
#include "panelbeam/analytic.hpp"
#include "panelbeam/montecarlo.hpp"

#include <algorithm>
#include <cmath>

using namespace panelbeam;

namespace
{

std::vector<double> geometry(const SystemConfig& cfg, std::uint64_t seed)
{
    Rng rng = make_stream(seed, geometry_stream);
    return sample_aods(cfg.num_paths, default_min_separation(cfg), rng);
}

double three_sigma(double p, std::size_t n)
{
    return 3.0 * std::sqrt(std::max(p * (1.0 - p), 1e-6) / static_cast<double>(n));
}

} // namespace

TEST_CASE("empirical CDF")
{
    const EmpiricalCdf cdf({3.0, 0.0, 1.0, 1.0});
    CHECK(cdf.size() == 4);
    CHECK(cdf(-1.0) == 0.0);
    CHECK(cdf(0.0) == 0.25);
    CHECK(cdf.below(0.0) == 0.0);
    CHECK(cdf(1.0) == 0.75);
    CHECK(cdf.below(1.0) == 0.25);
    CHECK(cdf(5.0) == 1.0);
    CHECK(std::is_sorted(cdf.sorted().begin(), cdf.sorted().end()));
}

TEST_CASE("blockage atoms in idealized trials")
{
    const auto cfg = default_config();
    const std::size_t n = 200'000;
    for (const auto& [q, atom] : {std::pair{PanelAllocation({8, 0, 0, 0}), 0.4},
                                  std::pair{PanelAllocation({2, 2, 2, 2}), 0.0256},
                                  std::pair{PanelAllocation({4, 0, 4, 0}), 0.16}})
    {
        const auto r = run_trials(cfg, q, {}, SimulationMode::idealized, n, 7);
        const double zeros =
            static_cast<double>(std::count(r.se_samples.begin(), r.se_samples.end(), 0.0)) / static_cast<double>(n);
        CHECK(std::abs(zeros - atom) <= three_sigma(atom, n));
        CHECK(r.empirical_cdf(0.0) == doctest::Approx(zeros));
        CHECK(empirical_outage(r, 0.0) == 0.0);
        CHECK(std::abs(empirical_outage(r, 1e-9) - atom) <= three_sigma(atom, n));
    }
}

TEST_CASE("realistic blockage attenuates instead of erasing")
{
    const auto cfg = default_config();
    const auto aods = geometry(cfg, 3);
    for (auto corr : {BlockageCorrelation::per_frame, BlockageCorrelation::per_path})
    {
        TrialOptions opts;
        opts.correlation = corr;
        const auto r = run_trials(cfg, PanelAllocation({8, 0, 0, 0}), aods, SimulationMode::realistic, 50'000, 5, opts);
        CHECK(std::count(r.se_samples.begin(), r.se_samples.end(), 0.0) == 0);
        CHECK(r.mode == SimulationMode::realistic);
        CHECK(r.aods == aods);
    }
    CHECK_THROWS_AS(run_trials(cfg, PanelAllocation({8, 0, 0, 0}), std::vector<double>{0.3},
                               SimulationMode::realistic, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_trials(cfg, PanelAllocation({8, 0, 0, 0}), {}, SimulationMode::idealized, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("reproducibility")
{
    const auto cfg = default_config();
    const auto aods = geometry(cfg, 9);
    const PanelAllocation q({3, 1, 2, 2});
    for (auto mode : {SimulationMode::idealized, SimulationMode::realistic})
    {
        TrialOptions one, four;
        one.threads = 1;
        four.threads = 4;
        const auto a = run_trials(cfg, q, aods, mode, 40'000, 42, one);
        const auto b = run_trials(cfg, q, aods, mode, 40'000, 42, four);
        const auto c = run_trials(cfg, q, aods, mode, 40'000, 43, four);
        CHECK(a.se_samples == b.se_samples);
        CHECK(a.mean_se == b.mean_se);
        CHECK(a.se_samples != c.se_samples);

        // a shorter run is a prefix of a longer one
        const auto d = run_trials(cfg, q, aods, mode, 20'000, 42, one);
        CHECK(std::equal(d.se_samples.begin(), d.se_samples.end(), a.se_samples.begin()));
    }
    CHECK(std::string(to_string(SimulationMode::idealized)) == "idealized");
    CHECK(std::string(to_string(SimulationMode::realistic)) == "realistic");
}

TEST_CASE("idealized trials reproduce the closed form")
{
    const auto cfg = default_config();
    const std::size_t n = 200'000;
    std::uint64_t seed = 100;
    for (const auto& q : {PanelAllocation({8, 0, 0, 0}), PanelAllocation({2, 2, 2, 2}), PanelAllocation({1, 2, 2, 3}),
                          PanelAllocation({4, 0, 2, 2}), PanelAllocation({5, 3, 0, 0})})
    {
        const auto r = run_trials(cfg, q, {}, SimulationMode::idealized, n, ++seed);
        const auto mix = rsnr_mixture(q, cfg);
        for (double xi : {0.25, 1.0, 2.0, 4.0, 6.0, 8.0})
        {
            const double p = outage_probability(mix, xi);
            CHECK(std::abs(empirical_outage(r, xi) - p) <= three_sigma(p, n));
        }
        // 99.9% Kolmogorov critical value 1.95/sqrt(n)
        CHECK(ks_distance(r.empirical_cdf, mix) <= 1.95 / std::sqrt(static_cast<double>(n)));

        const double avg = average_rsnr(q, cfg);
        CHECK(r.mean_rsnr == doctest::Approx(avg).epsilon(0.02));
        CHECK(r.mean_se <= std::log2(1.0 + avg));
    }

    const auto r = run_trials(cfg, PanelAllocation({2, 2, 2, 2}), {}, SimulationMode::idealized, 1'000'000, 77);
    CHECK(std::abs(empirical_outage(r, 1.0) - outage_probability(PanelAllocation({2, 2, 2, 2}), cfg, 1.0)) <= 0.005);
}

TEST_CASE("KS distance")
{
    SystemConfig cfg = default_config();
    const auto mix = rsnr_mixture(PanelAllocation({8, 0, 0, 0}), cfg);
    // all mass at zero: the largest gap is the continuous part
    const EmpiricalCdf zeros(std::vector<double>(10, 0.0));
    CHECK(ks_distance(zeros, mix) == doctest::Approx(0.6));
    // a point far in the tail: the gap sits just below it
    const EmpiricalCdf far(std::vector<double>{1e9});
    CHECK(ks_distance(far, mix) == doctest::Approx(1.0));
}
