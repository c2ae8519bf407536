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

#include "panelbeam/cli.hpp"

#include "panelbeam/panelbeam.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace panelbeam::cli
{

const char* to_string(Method m)
{
    switch (m)
    {
    case Method::los:
        return "los";
    case Method::uniform:
        return "uniform";
    case Method::outmin:
        return "outmin";
    case Method::outmin_ase:
        return "outmin_ase";
    }
    return "?";
}

void ExperimentSpec::validate() const
{
    if (methods.empty())
        throw std::invalid_argument("at least one method is required");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep grid must be strictly increasing");
    if (trials < 1)
        throw std::invalid_argument("--trials must be positive");
    if (geometries < 1)
        throw std::invalid_argument("--geometries must be positive");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("--epsilon must lie in [0, 1]");
    if (target_se < 0.0)
        throw std::invalid_argument("--target-se must be nonnegative");
    scenario.config.validate();
}

std::vector<double> linear_grid(double lo, double hi, int points)
{
    if (points < 1)
        throw std::invalid_argument("grid needs at least one point");
    if (points == 1)
        return {lo};
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return g;
}

std::vector<Method> parse_methods(const std::string& list)
{
    static const std::map<std::string, Method> names = {
        {"los", Method::los}, {"uniform", Method::uniform}, {"outmin", Method::outmin}, {"outmin_ase", Method::outmin_ase}};
    std::vector<Method> out;
    std::istringstream is(list);
    std::string item;
    while (std::getline(is, item, ','))
    {
        if (item.empty())
            continue;
        auto it = names.find(item);
        if (it == names.end())
            throw std::invalid_argument("unknown method '" + item + "'");
        out.push_back(it->second);
    }
    return out;
}

namespace
{

const SystemConfig& config_of(const ExperimentSpec& spec) { return spec.scenario.config; }

PanelAllocation allocation_for(Method m, const SystemConfig& cfg, double target_se, double epsilon)
{
    switch (m)
    {
    case Method::los:
        return los_concentration(cfg);
    case Method::uniform:
        return uniform_allocation(cfg);
    case Method::outmin:
        return optimize_outmin(cfg, target_se).chosen;
    case Method::outmin_ase:
        return optimize_outmin_ase(cfg, target_se, epsilon).chosen;
    }
    throw std::logic_error("unhandled method");
}

std::vector<double> geometry(const ExperimentSpec& spec, int index)
{
    Rng rng = make_stream(spec.seed, geometry_stream + static_cast<std::uint64_t>(index));
    const auto& cfg = config_of(spec);
    return sample_aods(cfg.num_paths, default_min_separation(cfg), rng);
}

// Realistic samples pooled over spec.geometries AoD draws.
TrialBatchResult realistic_batch(const ExperimentSpec& spec, const SystemConfig& cfg, const PanelAllocation& alloc)
{
    TrialBatchResult pooled;
    pooled.mode = SimulationMode::realistic;
    pooled.seed = spec.seed;
    double se_sum = 0.0;
    double rsnr_sum = 0.0;
    const auto g_count = static_cast<std::size_t>(spec.geometries);
    for (std::size_t g = 0; g < g_count; ++g)
    {
        const std::size_t n = spec.trials / g_count + (g < spec.trials % g_count ? 1 : 0);
        if (n == 0)
            continue;
        const auto aods = geometry(spec, static_cast<int>(g));
        auto r = run_trials(cfg, alloc, aods, SimulationMode::realistic, n, mix64(spec.seed + g), {});
        pooled.se_samples.insert(pooled.se_samples.end(), r.se_samples.begin(), r.se_samples.end());
        se_sum += r.mean_se * static_cast<double>(n);
        rsnr_sum += r.mean_rsnr * static_cast<double>(n);
        if (g == 0)
            pooled.aods = r.aods;
    }
    pooled.trials = pooled.se_samples.size();
    pooled.mean_se = se_sum / static_cast<double>(pooled.trials);
    pooled.mean_rsnr = rsnr_sum / static_cast<double>(pooled.trials);
    pooled.empirical_cdf = EmpiricalCdf(pooled.se_samples);
    return pooled;
}

std::ofstream open_output(const ExperimentSpec& spec, const std::string& name, std::ostream& log)
{
    std::filesystem::create_directories(spec.output_dir);
    const auto path = spec.output_dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    log << "wrote " << path.string() << '\n';
    return f;
}

std::string header_comment(const ExperimentSpec& spec, const SystemConfig& cfg, const std::string& extra)
{
    std::ostringstream os;
    os << describe(cfg, spec.seed) << " trials=" << spec.trials << " geometries=" << spec.geometries
       << " epsilon=" << format_number(spec.epsilon) << " target_se=" << format_number(spec.target_se);
    if (!extra.empty())
        os << ' ' << extra;
    return os.str();
}

std::string methods_list(const ExperimentSpec& spec)
{
    std::string s;
    for (auto m : spec.methods)
        s += (s.empty() ? "" : ",") + std::string(to_string(m));
    return s;
}

// Results keyed by allocation so sweeps only simulate each distinct allocation once.
class BatchCache
{
public:
    BatchCache(const ExperimentSpec& spec, const SystemConfig& cfg)
        : spec_(spec)
        , cfg_(cfg)
    {
    }

    const TrialBatchResult& get(const PanelAllocation& alloc)
    {
        auto it = cache_.find(alloc);
        if (it == cache_.end())
            it = cache_.emplace(alloc, realistic_batch(spec_, cfg_, alloc)).first;
        return it->second;
    }

private:
    const ExperimentSpec& spec_;
    SystemConfig cfg_;
    std::map<PanelAllocation, TrialBatchResult> cache_;
};

} // namespace

void cmd_cdf(const ExperimentSpec& spec, std::ostream& log)
{
    spec.validate();
    const auto& cfg = config_of(spec);
    const auto aods = geometry(spec, 0);
    std::vector<TrialBatchResult> summaries;
    for (Method m : spec.methods)
    {
        const auto alloc = allocation_for(m, cfg, spec.target_se, spec.epsilon);
        const auto mix = rsnr_mixture(alloc, cfg);
        auto ideal = run_trials(cfg, alloc, aods, SimulationMode::idealized, spec.trials, spec.seed);
        auto real = realistic_batch(spec, cfg, alloc);

        auto f = open_output(spec, std::string("cdf_") + to_string(m) + ".csv", log);
        CsvWriter w(f);
        w.comment(header_comment(spec, cfg, std::string("method=") + to_string(m) + " allocation=" + alloc.to_string()));
        w.header({"se_bits", "cdf_analytic", "cdf_mc_idealized", "cdf_mc_realistic"});
        for (double se : spec.grid)
            w.cell(se).cell(mix.cdf(se_to_rsnr(se))).cell(ideal.empirical_cdf(se)).cell(real.empirical_cdf(se)).end_row();

        log << to_string(m) << ' ' << alloc.to_string() << " ks_idealized=" << format_number(ks_distance(ideal.empirical_cdf, mix))
            << '\n';
        summaries.push_back(std::move(ideal));
        summaries.push_back(std::move(real));
    }
    auto f = open_output(spec, "summary.csv", log);
    export_summary(f, header_comment(spec, cfg, "methods=" + methods_list(spec)), summaries);
}

void cmd_sweep_target_se(const ExperimentSpec& spec, std::ostream& log)
{
    spec.validate();
    const auto& cfg = config_of(spec);
    BatchCache cache(spec, cfg);

    auto f = open_output(spec, "sweep_target_se.csv", log);
    CsvWriter w(f);
    w.comment(header_comment(spec, cfg, "methods=" + methods_list(spec)));
    std::vector<std::string> cols = {"target_se"};
    for (Method m : spec.methods)
        for (const char* suffix : {"_outage", "_outage_mc", "_avg_se_mc"})
            cols.push_back(std::string(to_string(m)) + suffix);
    w.header(cols);
    for (double se : spec.grid)
    {
        w.cell(se);
        for (Method m : spec.methods)
        {
            const auto alloc = allocation_for(m, cfg, se, spec.epsilon);
            const auto& batch = cache.get(alloc);
            w.cell(outage_probability(alloc, cfg, se)).cell(empirical_outage(batch, se)).cell(batch.mean_se);
        }
        w.end_row();
    }
}

void cmd_sweep_tx_snr(const ExperimentSpec& spec, std::ostream& log)
{
    spec.validate();
    auto f = open_output(spec, "sweep_tx_snr.csv", log);
    CsvWriter w(f);
    w.comment(header_comment(spec, config_of(spec), "methods=" + methods_list(spec) + " grid=tx_snr_db"));
    std::vector<std::string> cols = {"tx_snr_db"};
    for (Method m : spec.methods)
        for (const char* suffix : {"_avg_rsnr_db", "_avg_se_bound", "_avg_se_mc", "_outage"})
            cols.push_back(std::string(to_string(m)) + suffix);
    w.header(cols);
    for (double snr_db : spec.grid)
    {
        SystemConfig cfg = config_of(spec);
        cfg.tx_snr = db_to_linear(snr_db);
        BatchCache cache(spec, cfg);
        w.cell(snr_db);
        for (Method m : spec.methods)
        {
            const auto alloc = allocation_for(m, cfg, spec.target_se, spec.epsilon);
            w.cell(10.0 * std::log10(average_rsnr(alloc, cfg)))
                .cell(average_se_upper_bound(alloc, cfg))
                .cell(cache.get(alloc).mean_se)
                .cell(outage_probability(alloc, cfg, spec.target_se));
        }
        w.end_row();
    }
}

void cmd_allocate(const ExperimentSpec& spec, std::ostream& log)
{
    spec.validate();
    const auto& cfg = config_of(spec);
    {
        auto f = open_output(spec, "allocation.csv", log);
        CsvWriter w(f);
        w.comment(header_comment(spec, cfg, ""));
        std::vector<std::string> cols = {"target_se", "method"};
        for (int l = 1; l <= cfg.num_paths; ++l)
            cols.push_back("q_" + std::to_string(l));
        cols.insert(cols.end(), {"n_b", "outage", "avg_rsnr_db", "g_los"});
        w.header(cols);
        for (double se : spec.grid)
        {
            const AllocationReport reports[] = {optimize_outmin(cfg, se), optimize_outmin_ase(cfg, se, spec.epsilon)};
            const char* names[] = {"outmin", "outmin_ase"};
            for (int k = 0; k < 2; ++k)
            {
                const auto& r = reports[k];
                w.cell(se).cell(names[k]);
                for (int q : r.chosen.counts())
                    w.cell(q);
                w.cell(r.chosen.num_beams()).cell(r.outage).cell(10.0 * std::log10(r.avg_rsnr)).cell(r.g_los).end_row();
            }
        }
    }
    {
        auto f = open_output(spec, "candidates_outmin.csv", log);
        export_candidates(f, header_comment(spec, cfg, "method=outmin"), optimize_outmin(cfg, spec.target_se));
    }
    {
        auto f = open_output(spec, "candidates_outmin_ase.csv", log);
        export_candidates(f, header_comment(spec, cfg, "method=outmin_ase"),
                          optimize_outmin_ase(cfg, spec.target_se, spec.epsilon));
    }
}

void cmd_pattern(const ExperimentSpec& spec, const std::vector<std::string>& allocations, int grid_points,
                 std::ostream& log)
{
    spec.validate();
    const auto& cfg = config_of(spec);
    const auto aods = geometry(spec, 0);
    std::vector<double> grid = linear_grid(0.0, std::numbers::pi, grid_points);

    std::vector<PanelAllocation> allocs;
    if (allocations.empty())
    {
        allocs.push_back(los_concentration(cfg));
        if (cfg.n_p >= cfg.num_paths)
            allocs.push_back(uniform_allocation(cfg));
    }
    for (const auto& text : allocations)
        allocs.push_back(PanelAllocation::parse(text));

    std::ostringstream aod_text;
    for (double a : aods)
        aod_text << (aod_text.tellp() ? ";" : "") << format_number(a * 180.0 / std::numbers::pi);
    for (const auto& alloc : allocs)
    {
        const auto bf = build_beamformer(alloc, aods, cfg);
        const auto gain = beam_pattern(bf, grid);
        std::string name = "pattern";
        for (int q : alloc.counts())
            name += "_" + std::to_string(q);
        auto f = open_output(spec, name + ".csv", log);
        export_beam_pattern(f, header_comment(spec, cfg, "allocation=" + alloc.to_string() + " aods_deg=" + aod_text.str()),
                            grid, gain);
    }
}

void cmd_count(const ExperimentSpec& spec, const std::vector<int>& panels, int min_paths, int max_paths,
               std::uint64_t capacity, std::ostream& log)
{
    if (panels.empty())
        throw std::invalid_argument("--panels needs at least one value");
    if (min_paths < 2 || max_paths < min_paths)
        throw std::invalid_argument("path range must satisfy 2 <= min <= max");
    const auto& cfg = config_of(spec);

    auto f = open_output(spec, "count.csv", log);
    CsvWriter w(f);
    w.comment("n_a=" + std::to_string(cfg.n_a) + " capacity=" + std::to_string(capacity));
    w.header({"n_p", "n_t", "num_paths", "count"});
    EnumerationOptions opts;
    opts.capacity = capacity;
    for (int n_p : panels)
    {
        for (int L = min_paths; L <= max_paths; ++L)
        {
            const auto closed = allocation_count(n_p, L);
            const auto listed = enumerate_allocations(n_p, L, opts).size();
            if (listed != closed)
                throw std::logic_error("enumeration disagrees with the closed-form count");
            w.cell(n_p).cell(n_p * cfg.n_a).cell(L).cell(static_cast<long long>(closed)).end_row();
        }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multi-panel analog beamforming under stochastic path blockage"};
    app.require_subcommand(1);

    struct Common
    {
        std::string scenario;
        std::optional<std::uint64_t> seed;
        std::size_t trials = 100'000;
        double epsilon = 0.05;
        double target_se = 1.0;
        std::string methods = "los,uniform,outmin,outmin_ase";
        std::string out = ".";
        int geometries = 1;
        std::optional<double> grid_min, grid_max;
        std::optional<int> grid_points;
    } c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scenario", c.scenario, "Scenario file (key = value lines)");
        sub->add_option("--seed", c.seed, "Random seed; overrides the scenario seed");
        sub->add_option("--trials", c.trials, "Monte Carlo trials per curve");
        sub->add_option("--epsilon", c.epsilon, "Outage slack of the average-SE reinforced search");
        sub->add_option("--target-se", c.target_se, "Target spectral efficiency in bits/s/Hz");
        sub->add_option("--methods", c.methods, "Comma separated subset of los,uniform,outmin,outmin_ase");
        sub->add_option("--out", c.out, "Output directory");
        sub->add_option("--geometries", c.geometries, "AoD draws pooled in realistic simulations");
        sub->add_option("--grid-min", c.grid_min, "First grid point");
        sub->add_option("--grid-max", c.grid_max, "Last grid point");
        sub->add_option("--grid-points", c.grid_points, "Number of grid points");
    };

    auto* cdf = app.add_subcommand("cdf", "SE CDF per method: analytic, idealized and realistic Monte Carlo");
    auto* sweep_se = app.add_subcommand("sweep-se", "Outage and average SE versus target SE");
    auto* sweep_snr = app.add_subcommand("sweep-snr", "Average RSNR and SE versus transmit SNR (dB grid)");
    auto* allocate = app.add_subcommand("allocate", "Optimized allocations versus target SE, candidate tables");
    auto* pattern = app.add_subcommand("pattern", "Beam patterns of panel allocations");
    auto* count = app.add_subcommand("count", "Number of allocation candidates");
    for (auto* s : {cdf, sweep_se, sweep_snr, allocate, pattern, count})
        add_common(s);

    std::vector<std::string> pattern_allocs;
    pattern->add_option("--alloc", pattern_allocs, "Allocation such as 2,2,2,2 (repeatable)");

    std::vector<int> count_panels = {2, 4, 8, 16};
    int count_min_paths = 2, count_max_paths = 8;
    std::uint64_t count_capacity = EnumerationOptions{}.capacity;
    count->add_option("--panels", count_panels, "Panel counts")->delimiter(',');
    count->add_option("--min-paths", count_min_paths, "Smallest number of paths");
    count->add_option("--max-paths", count_max_paths, "Largest number of paths");
    count->add_option("--capacity", count_capacity, "Largest enumerable search space");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    ExperimentSpec spec;
    auto grid_or = [&](double lo, double hi, int n) {
        return linear_grid(c.grid_min.value_or(lo), c.grid_max.value_or(hi), c.grid_points.value_or(n));
    };
    try
    {
        spec.scenario = c.scenario.empty() ? default_scenario() : load_scenario(c.scenario);
        spec.seed = c.seed.value_or(spec.scenario.seed);
        spec.scenario.seed = spec.seed;
        spec.trials = c.trials;
        spec.epsilon = c.epsilon;
        spec.target_se = c.target_se;
        spec.methods = parse_methods(c.methods);
        spec.output_dir = c.out;
        spec.geometries = c.geometries;

        if (cdf->parsed())
            spec.grid = grid_or(0.0, 10.0, 101);
        else if (sweep_se->parsed() || allocate->parsed())
            spec.grid = grid_or(0.25, 8.0, 32);
        else if (sweep_snr->parsed())
            spec.grid = grid_or(0.0, 20.0, 9);
        spec.validate();
    }
    catch (const std::invalid_argument& e)
    {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try
    {
        if (cdf->parsed())
            cmd_cdf(spec, out);
        else if (sweep_se->parsed())
            cmd_sweep_target_se(spec, out);
        else if (sweep_snr->parsed())
            cmd_sweep_tx_snr(spec, out);
        else if (allocate->parsed())
            cmd_allocate(spec, out);
        else if (pattern->parsed())
            cmd_pattern(spec, pattern_allocs, c.grid_points.value_or(1801), out);
        else if (count->parsed())
            cmd_count(spec, count_panels, count_min_paths, count_max_paths, count_capacity, out);
    }
    catch (const CapacityError& e)
    {
        err << "capacity error: " << e.what() << '\n';
        return exit_capacity;
    }
    catch (const std::invalid_argument& e)
    {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}

} // namespace panelbeam::cli
