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

#include "panelbeam/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace panelbeam::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_failure = 1,
    exit_usage = 2,
    exit_capacity = 3
};

enum class Method
{
    los,
    uniform,
    outmin,
    outmin_ase
};

const char* to_string(Method m);

// Resolved inputs of one experiment run.
struct ExperimentSpec
{
    Scenario scenario = default_scenario();
    std::vector<double> grid;          // target SE or tx SNR (dB) depending on the subcommand
    std::vector<Method> methods = {Method::los, Method::uniform, Method::outmin, Method::outmin_ase};
    double epsilon = 0.05;
    double target_se = 1.0;
    std::size_t trials = 100'000;
    std::uint64_t seed = 1;
    int geometries = 1;
    std::filesystem::path output_dir = ".";

    // Throws std::invalid_argument: empty methods, grid not strictly increasing.
    void validate() const;
};

// Evenly spaced grid including both ends.
std::vector<double> linear_grid(double lo, double hi, int points);

std::vector<Method> parse_methods(const std::string& list);

// Subcommand bodies. Each writes its CSV files into spec.output_dir.
void cmd_cdf(const ExperimentSpec& spec, std::ostream& log);
void cmd_sweep_target_se(const ExperimentSpec& spec, std::ostream& log);
void cmd_sweep_tx_snr(const ExperimentSpec& spec, std::ostream& log);
void cmd_allocate(const ExperimentSpec& spec, std::ostream& log);
void cmd_pattern(const ExperimentSpec& spec, const std::vector<std::string>& allocations, int grid_points,
                 std::ostream& log);
void cmd_count(const ExperimentSpec& spec, const std::vector<int>& panels, int min_paths, int max_paths,
               std::uint64_t capacity, std::ostream& log);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace panelbeam::cli
