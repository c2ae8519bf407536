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

#include "panelbeam/panelbeam.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace panelbeam;

namespace
{

std::string repr(const SystemConfig& c)
{
    std::ostringstream s;
    s << "SystemConfig(n_a=" << c.n_a << ", n_p=" << c.n_p << ", num_paths=" << c.num_paths
      << ", rician_k=" << c.rician_k << ", tx_snr=" << c.tx_snr << ", p_min=" << c.p_min << ", p_max=" << c.p_max
      << ")";
    return s.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Multi-panel analog beamforming under stochastic path blockage";

    py::register_exception<SamplingError>(m, "SamplingError", PyExc_RuntimeError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("n_a", &SystemConfig::n_a)
        .def_readwrite("n_p", &SystemConfig::n_p)
        .def_readwrite("num_paths", &SystemConfig::num_paths)
        .def_readwrite("rician_k", &SystemConfig::rician_k)
        .def_readwrite("tx_snr", &SystemConfig::tx_snr)
        .def_readwrite("p_min", &SystemConfig::p_min)
        .def_readwrite("p_max", &SystemConfig::p_max)
        .def_readwrite("carrier_hz", &SystemConfig::carrier_hz)
        .def_readwrite("bandwidth_hz", &SystemConfig::bandwidth_hz)
        .def_property_readonly("n_t", &SystemConfig::n_t)
        .def_property_readonly("p_blk", &SystemConfig::p_blk)
        .def("validate", &SystemConfig::validate)
        .def("__repr__", &repr);

    m.def("default_config", &default_config);
    m.def("load_scenario", [](const std::string& path) {
        const auto s = load_scenario(path);
        return py::make_tuple(s.config, s.seed);
    });
    m.def("path_variances", [](double kappa, int L) { return path_variances(kappa, L).variances; },
          py::arg("kappa"), py::arg("num_paths"));
    m.def("db_to_linear", &db_to_linear);
    m.def("linear_to_db", &linear_to_db);

    py::class_<PanelAllocation>(m, "PanelAllocation")
        .def(py::init<std::vector<int>>())
        .def_static("parse", &PanelAllocation::parse)
        .def_property_readonly("counts",
                               [](const PanelAllocation& a) {
                                   return std::vector<int>(a.counts().begin(), a.counts().end());
                               })
        .def_property_readonly("num_beams", &PanelAllocation::num_beams)
        .def_property_readonly("num_panels", &PanelAllocation::num_panels)
        .def("__len__", &PanelAllocation::num_paths)
        .def("__getitem__",
             [](const PanelAllocation& a, std::size_t i) {
                 if (i >= a.num_paths())
                     throw py::index_error();
                 return a[i];
             })
        .def("__eq__", [](const PanelAllocation& a, const PanelAllocation& b) { return a == b; })
        .def("__hash__", [](const PanelAllocation& a) { return py::hash(py::str(a.to_string())); })
        .def("__str__", &PanelAllocation::to_string)
        .def("__repr__", [](const PanelAllocation& a) { return "PanelAllocation(" + a.to_string() + ")"; });

    m.def("los_concentration", &los_concentration);
    m.def("uniform_allocation", &uniform_allocation);
    m.def("g_los", &g_los);

    m.def("array_response", &array_response, py::arg("n"), py::arg("theta"));
    m.def(
        "beam_pattern",
        [](const PanelAllocation& q, const std::vector<double>& aods, const SystemConfig& cfg,
           const std::vector<double>& grid) { return beam_pattern(build_beamformer(q, aods, cfg), grid); },
        py::arg("allocation"), py::arg("aods"), py::arg("config"), py::arg("grid"));
    m.def(
        "equivalent_array_response",
        [](const PanelAllocation& q, const std::vector<double>& aods, const SystemConfig& cfg) {
            return equivalent_array_response_exact(aods, build_beamformer(q, aods, cfg));
        },
        py::arg("allocation"), py::arg("aods"), py::arg("config"));
    m.def("sample_aods", [](const SystemConfig& cfg, std::uint64_t seed) {
        Rng rng = make_stream(seed, geometry_stream);
        return sample_aods(cfg.num_paths, default_min_separation(cfg), rng);
    });

    py::class_<RsnrMixture>(m, "RsnrMixture")
        .def_readonly("zero_mass", &RsnrMixture::zero_mass)
        .def_property_readonly("weights",
                               [](const RsnrMixture& mix) {
                                   std::vector<double> w;
                                   for (const auto& c : mix.components)
                                       w.push_back(c.weight);
                                   return w;
                               })
        .def_property_readonly("scales",
                               [](const RsnrMixture& mix) {
                                   std::vector<double> s;
                                   for (const auto& c : mix.components)
                                       s.push_back(c.scale);
                                   return s;
                               })
        .def("cdf", &RsnrMixture::cdf)
        .def("pdf", &RsnrMixture::pdf)
        .def("mean", &RsnrMixture::mean);

    m.def("rsnr_mixture", &rsnr_mixture);
    m.def("se_to_rsnr", &se_to_rsnr);
    m.def("outage_probability",
          py::overload_cast<const PanelAllocation&, const SystemConfig&, double>(&outage_probability),
          py::arg("allocation"), py::arg("config"), py::arg("target_se"));
    m.def("average_rsnr", &average_rsnr);
    m.def("average_se_upper_bound", &average_se_upper_bound);

    m.def("allocation_count", &allocation_count, py::arg("n_p"), py::arg("num_paths"), py::arg("require_los") = true);
    m.def(
        "enumerate_allocations",
        [](int n_p, int L, bool require_los, std::uint64_t capacity) {
            return enumerate_allocations(n_p, L, {require_los, capacity});
        },
        py::arg("n_p"), py::arg("num_paths"), py::arg("require_los") = true, py::arg("capacity") = 100'000'000);

    py::class_<AllocationReport>(m, "AllocationReport")
        .def_readonly("chosen", &AllocationReport::chosen)
        .def_readonly("outage", &AllocationReport::outage)
        .def_readonly("avg_rsnr", &AllocationReport::avg_rsnr)
        .def_readonly("g_los", &AllocationReport::g_los)
        .def_readonly("min_outage", &AllocationReport::min_outage)
        .def_property_readonly("num_candidates", [](const AllocationReport& r) { return r.candidates.size(); });

    m.def(
        "maximize_average_se",
        [](const SystemConfig& cfg, const WarningSink& warn) { return maximize_average_se(cfg, warn); },
        py::arg("config"), py::arg("warn") = WarningSink{});
    m.def(
        "optimize_outmin", [](const SystemConfig& cfg, double xi) { return optimize_outmin(cfg, xi); },
        py::arg("config"), py::arg("target_se"));
    m.def(
        "optimize_outmin_ase",
        [](const SystemConfig& cfg, double xi, double eps) { return optimize_outmin_ase(cfg, xi, eps); },
        py::arg("config"), py::arg("target_se"), py::arg("epsilon") = 0.05);

    py::enum_<SimulationMode>(m, "SimulationMode")
        .value("idealized", SimulationMode::idealized)
        .value("realistic", SimulationMode::realistic);

    py::class_<TrialBatchResult>(m, "TrialBatchResult")
        .def_readonly("se_samples", &TrialBatchResult::se_samples)
        .def_readonly("mean_se", &TrialBatchResult::mean_se)
        .def_readonly("mean_rsnr", &TrialBatchResult::mean_rsnr)
        .def_readonly("trials", &TrialBatchResult::trials)
        .def_readonly("seed", &TrialBatchResult::seed)
        .def_readonly("mode", &TrialBatchResult::mode)
        .def("outage", &empirical_outage)
        .def("ks_distance",
             [](const TrialBatchResult& r, const RsnrMixture& mix) { return ks_distance(r.empirical_cdf, mix); });

    m.def(
        "run_trials",
        [](const SystemConfig& cfg, const PanelAllocation& q, std::vector<double> aods, SimulationMode mode,
           std::size_t trials, std::uint64_t seed, unsigned threads) {
            TrialOptions opts;
            opts.threads = threads;
            py::gil_scoped_release release;
            return run_trials(cfg, q, aods, mode, trials, seed, opts);
        },
        py::arg("config"), py::arg("allocation"), py::arg("aods") = std::vector<double>{},
        py::arg("mode") = SimulationMode::idealized, py::arg("trials") = 100'000, py::arg("seed") = 1,
        py::arg("threads") = 0);
}
