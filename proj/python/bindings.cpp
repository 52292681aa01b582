// SPDX-License-Identifier: Apache-2.0
//
// fama-lab: fluid-antenna multiple access SIR statistics and Monte-Carlo toolkit
// Copyright (C) 2026 The fama-lab Authors
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

#include "fama/acceptance.hpp"
#include "fama/analytic.hpp"
#include "fama/cli.hpp"
#include "fama/error.hpp"
#include "fama/experiments.hpp"
#include "fama/special_functions.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fama;

namespace {

mc::ExperimentOptions options(std::size_t workers, std::uint64_t chunk_size)
{
    mc::ExperimentOptions o;
    o.workers = workers;
    o.chunk_size = chunk_size;
    return o;
}

py::dict counters(const mc::RunCounters &c)
{
    py::dict d;
    d["realizations"] = c.realizations;
    d["resampled_singular"] = c.resampled_singular;
    d["infinite_sir"] = c.infinite_sir;
    d["dropped_rows"] = c.dropped_rows;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "fluid-antenna multiple access SIR statistics";
    m.attr("__version__") = cli::kVersion;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SingularGramError>(m, "SingularGramError", PyExc_ArithmeticError);

    py::enum_<Scheme>(m, "Scheme").value("MRT", Scheme::MRT).value("ZF", Scheme::ZF);
    py::enum_<ReferenceMode>(m, "ReferenceMode")
        .value("member", ReferenceMode::member)
        .value("external", ReferenceMode::external);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("M", &SystemConfig::M)
        .def_readwrite("U", &SystemConfig::U)
        .def_readwrite("N", &SystemConfig::N)
        .def_readwrite("W", &SystemConfig::W)
        .def_readwrite("scheme", &SystemConfig::scheme)
        .def_readwrite("beta", &SystemConfig::beta)
        .def_readwrite("powers", &SystemConfig::powers)
        .def_readwrite("reference_mode", &SystemConfig::reference_mode)
        .def_readwrite("include_reference_in_selection", &SystemConfig::include_reference_in_selection)
        .def_readwrite("seed", &SystemConfig::seed)
        .def_readwrite("realizations", &SystemConfig::realizations)
        .def("validate", &SystemConfig::validate);

    m.def("parse_config", [](const std::string &text, const std::map<std::string, std::string> &overrides) {
        return cli::parse_settings_text(text, overrides).system;
    }, py::arg("text") = "", py::arg("overrides") = std::map<std::string, std::string>{});

    m.def("bessel_j0", &special::bessel_j0, py::arg("x"));
    m.def("reg_inc_beta", &special::reg_inc_beta, py::arg("y"), py::arg("a"), py::arg("b"));

    py::class_<analytic::BetaPrimeParams>(m, "BetaPrimeParams")
        .def(py::init([](int a, int b) {
            analytic::BetaPrimeParams p{a, b};
            p.validate();
            return p;
        }), py::arg("a"), py::arg("b"))
        .def_readonly("a", &analytic::BetaPrimeParams::a)
        .def_readonly("b", &analytic::BetaPrimeParams::b)
        .def("__repr__", [](const analytic::BetaPrimeParams &p) {
            return "BetaPrimeParams(" + std::to_string(p.a) + ", " + std::to_string(p.b) + ")";
        });

    m.def("sir_params", &analytic::sir_params, py::arg("scheme"), py::arg("M"), py::arg("U"));
    m.def("betaprime_pdf", &analytic::betaprime_pdf, py::arg("x"), py::arg("params"));
    m.def("betaprime_cdf", &analytic::betaprime_cdf, py::arg("gamma"), py::arg("params"));
    m.def("betaprime_sf", &analytic::betaprime_sf, py::arg("gamma"), py::arg("params"));
    m.def("betaprime_cdf_finite_sum", &analytic::betaprime_cdf_finite_sum, py::arg("gamma"), py::arg("params"));
    m.def("rho_u_approx", &analytic::rho_u_approx, py::arg("mu_k"), py::arg("mu_l"), py::arg("M_eff"), py::arg("L"));
    m.def("rho_x_approx", &analytic::rho_x_approx, py::arg("mu_k"), py::arg("mu_l"), py::arg("M_eff"), py::arg("L"));
    m.def("asymptote_small_gamma",
          py::overload_cast<double, analytic::BetaPrimeParams>(&analytic::asymptote_small_gamma), py::arg("gamma"),
          py::arg("params"));
    m.def("asymptote_large_m", &analytic::asymptote_large_m, py::arg("gamma"), py::arg("scheme"), py::arg("M"),
          py::arg("U"));
    m.def("asymptote_tail", &analytic::asymptote_tail, py::arg("gamma"), py::arg("params"));
    m.def("diversity_order", &analytic::diversity_orders, py::arg("scheme"), py::arg("M"), py::arg("U"), py::arg("N"));
    m.def("outage_envelope", [](double gamma, analytic::BetaPrimeParams p, int N) {
        const auto e = analytic::outage_envelope(gamma, p, N);
        py::dict d;
        d["upper"] = e.upper;
        d["lower"] = e.lower;
        d["iid_benchmark"] = e.iid_benchmark;
        d["large_n_approx"] = e.large_n_approx;
        d["large_n_in_regime"] = e.large_n_in_regime;
        return d;
    }, py::arg("gamma"), py::arg("params"), py::arg("N"));

    m.def("run_cdf_experiment", [](const SystemConfig &c, const std::string &mode, std::size_t workers,
                                   std::uint64_t chunk_size) {
        const auto cdf_mode = mode == "marginal" ? mc::CdfMode::marginal : mc::CdfMode::physical_reference;
        if (mode != "marginal" && mode != "physical_reference")
            throw ConfigError("mode", "expected marginal or physical_reference");
        mc::CdfExperimentResult r;
        {
            py::gil_scoped_release release;
            r = mc::run_cdf_experiment(c, cdf_mode, options(workers, chunk_size));
        }
        py::dict d;
        d["gamma"] = r.empirical.grid();
        d["empirical"] = r.empirical.values();
        d["analytic"] = r.analytic_cdf;
        d["finite_sum"] = r.analytic_finite_sum;
        d["ks"] = r.ks;
        d["params"] = r.params;
        d["counters"] = counters(r.counters);
        return d;
    }, py::arg("config"), py::arg("mode") = "marginal", py::arg("workers") = 0, py::arg("chunk_size") = 10000);

    m.def("run_correlation_experiment", [](const SystemConfig &c, bool include_reference, std::size_t workers,
                                           std::uint64_t chunk_size) {
        mc::CorrelationOptions co;
        co.include_reference = include_reference;
        mc::CorrelationExperimentResult r;
        {
            py::gil_scoped_release release;
            r = mc::run_correlation_experiment(c, co, options(workers, chunk_size));
        }
        py::dict d;
        d["ports"] = r.physical.ports;
        d["rho_x"] = r.physical.rho;
        d["rho_x_model"] = r.rho_x_model;
        d["rho_u_surrogate"] = r.surrogate.rho;
        d["rho_u_model"] = r.rho_u_model;
        d["max_deviation"] = r.max_deviation;
        d["port_set_note"] = r.port_set_note;
        d["counters"] = counters(r.counters);
        return d;
    }, py::arg("config"), py::arg("include_reference") = false, py::arg("workers") = 0, py::arg("chunk_size") = 10000);

    m.def("run_outage_experiment", [](const SystemConfig &c, std::vector<double> grid, std::size_t workers,
                                      std::uint64_t chunk_size) {
        mc::OutageExperimentResult r;
        {
            py::gil_scoped_release release;
            r = mc::run_outage_experiment(c, std::move(grid), {}, options(workers, chunk_size));
        }
        std::vector<double> upper, lower, iid_exact;
        for (const auto &e : r.envelope) {
            upper.push_back(e.upper);
            lower.push_back(e.lower);
            iid_exact.push_back(e.iid_benchmark);
        }
        py::dict d;
        d["gamma"] = r.gamma;
        d["correlated"] = r.correlated;
        d["correlated_ci"] = r.correlated_ci;
        d["iid"] = r.iid;
        d["upper"] = upper;
        d["lower"] = lower;
        d["iid_analytic"] = iid_exact;
        d["counters"] = counters(r.counters);
        return d;
    }, py::arg("config"), py::arg("gamma"), py::arg("workers") = 0, py::arg("chunk_size") = 10000);

    m.def("run_command", [](const std::string &name, const std::string &config_text,
                            const std::map<std::string, std::string> &overrides, std::size_t workers) {
        const auto settings = cli::parse_settings_text(config_text, overrides);
        cli::CommandResult r;
        {
            py::gil_scoped_release release;
            r = cli::run_command(name, settings, options(workers, settings.chunk_size));
        }
        py::dict files;
        for (const auto &f : r.files)
            files[py::str(f.name)] = f.contents;
        files["manifest.txt"] = r.manifest.to_text();
        return py::make_tuple(files, r.success, r.report);
    }, py::arg("name"), py::arg("config_text") = "", py::arg("overrides") = std::map<std::string, std::string>{},
       py::arg("workers") = 0);

    m.def("run_acceptance_criterion", [](int id, std::uint64_t seed) {
        acceptance::SuiteOptions o;
        o.seed = seed;
        acceptance::CriterionResult r;
        {
            py::gil_scoped_release release;
            r = acceptance::run_criterion(id, o);
        }
        return py::make_tuple(r.passed, acceptance::format_line(r));
    }, py::arg("id"), py::arg("seed") = acceptance::SuiteOptions{}.seed);
}
