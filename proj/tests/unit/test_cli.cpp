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

#include "panelbeam/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace panelbeam::cli;

namespace
{

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("panelbeam_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int invoke(std::vector<std::string> args, std::string* err_text = nullptr)
{
    args.insert(args.begin(), "panelbeam");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (err_text)
        *err_text = err.str();
    return code;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        FAIL("missing column " << name);
        return 0;
    }
};

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    return cells;
}

Table read_table(const fs::path& p)
{
    std::ifstream in(p);
    REQUIRE(in.good());
    Table t;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        if (t.header.empty())
        {
            t.header = split(line);
            continue;
        }
        std::vector<double> row;
        for (const auto& c : split(line))
            row.push_back(std::strtod(c.c_str(), nullptr));
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

TEST_CASE("helpers")
{
    CHECK(linear_grid(0.0, 1.0, 5) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(parse_methods("los,outmin_ase") == std::vector<Method>{Method::los, Method::outmin_ase});
    CHECK_THROWS_AS(parse_methods("los,best"), std::invalid_argument);
    CHECK(parse_methods("").empty());

    ExperimentSpec spec;
    spec.grid = {1.0, 1.0};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.grid = {1.0, 2.0};
    spec.methods.clear();
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("exit codes")
{
    const auto dir = scratch("codes");
    CHECK(invoke({"--help"}) == exit_ok);
    CHECK(invoke({}) == exit_usage);
    CHECK(invoke({"cdf", "--methods", "nope", "--out", dir.string()}) == exit_usage);
    CHECK(invoke({"sweep-se", "--grid-min", "3", "--grid-max", "1", "--out", dir.string()}) == exit_usage);
    CHECK(invoke({"cdf", "--trials", "-4"}) == exit_usage);
    CHECK(invoke({"cdf", "--scenario", (dir / "missing.scn").string(), "--out", dir.string()}) == exit_usage);

    std::string err;
    CHECK(invoke({"count", "--panels", "64", "--min-paths", "40", "--max-paths", "40", "--capacity", "1000000",
                  "--out", dir.string()},
                 &err) == exit_capacity);
    CHECK(!err.empty());
}

TEST_CASE("runs are byte-identical for a fixed seed")
{
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    const std::vector<std::string> common = {"cdf", "--trials", "3000", "--grid-points", "11", "--seed", "5",
                                             "--methods", "los,outmin_ase"};
    auto args_a = common;
    args_a.insert(args_a.end(), {"--out", a.string()});
    auto args_b = common;
    args_b.insert(args_b.end(), {"--out", b.string()});
    REQUIRE(invoke(args_a) == exit_ok);
    REQUIRE(invoke(args_b) == exit_ok);
    for (const auto* name : {"cdf_los.csv", "cdf_outmin_ase.csv", "summary.csv"})
    {
        REQUIRE(fs::exists(a / name));
        CHECK(slurp(a / name) == slurp(b / name));
    }
    const auto text = slurp(a / "cdf_los.csv");
    CHECK(text.rfind("#", 0) == 0);
    CHECK(text.find("seed") != std::string::npos);
}

TEST_CASE("target SE sweep")
{
    const auto dir = scratch("sweep_se");
    REQUIRE(invoke({"sweep-se", "--trials", "2000", "--grid-points", "9", "--out", dir.string()}) == exit_ok);
    const auto t = read_table(dir / "sweep_target_se.csv");
    REQUIRE(t.rows.size() == 9);
    const auto opt = t.column("outmin_outage");
    for (const auto* other : {"los_outage", "uniform_outage", "outmin_ase_outage"})
    {
        const auto c = t.column(other);
        for (const auto& row : t.rows)
            CHECK(row[opt] <= row[c] + 1e-12);
    }
}

TEST_CASE("transmit SNR sweep")
{
    const auto dir = scratch("sweep_snr");
    REQUIRE(invoke({"sweep-snr", "--trials", "2000", "--grid-points", "5", "--out", dir.string()}) == exit_ok);
    const auto t = read_table(dir / "sweep_tx_snr.csv");
    REQUIRE(t.rows.size() == 5);
    const auto los = t.column("los_avg_rsnr_db");
    for (const auto* other : {"uniform_avg_rsnr_db", "outmin_avg_rsnr_db", "outmin_ase_avg_rsnr_db"})
    {
        const auto c = t.column(other);
        for (const auto& row : t.rows)
            CHECK(row[los] >= row[c] - 1e-9);
    }
    for (const auto* m : {"los", "uniform", "outmin", "outmin_ase"})
    {
        const auto mc = t.column(std::string(m) + "_avg_se_mc");
        const auto bound = t.column(std::string(m) + "_avg_se_bound");
        for (const auto& row : t.rows)
            CHECK(row[mc] <= row[bound] + 1e-9);
    }
}

TEST_CASE("allocation tables and patterns")
{
    const auto dir = scratch("alloc");
    REQUIRE(invoke({"allocate", "--grid-min", "1", "--grid-max", "1", "--grid-points", "1", "--out",
                    dir.string()}) == exit_ok);
    const auto t = read_table(dir / "candidates_outmin.csv");
    CHECK(t.rows.size() == 120);
    CHECK(fs::exists(dir / "allocation.csv"));
    CHECK(fs::exists(dir / "candidates_outmin_ase.csv"));

    REQUIRE(invoke({"pattern", "--alloc", "8,0,0,0", "--alloc", "2,2,2,2", "--out", dir.string()}) == exit_ok);
    const auto p = read_table(dir / "pattern_8_0_0_0.csv");
    CHECK(p.rows.size() == 1801);
    double peak = 0.0;
    for (const auto& row : p.rows)
        peak = std::max(peak, row[p.column("gain_abs")]);
    CHECK(peak <= 16.0 + 1e-6);
    CHECK(peak >= 15.0);
    CHECK(fs::exists(dir / "pattern_2_2_2_2.csv"));

    REQUIRE(invoke({"count", "--out", dir.string()}) == exit_ok);
    const auto c = read_table(dir / "count.csv");
    CHECK(c.rows.size() == 4 * 7);
}
