// SPDX-License-Identifier: Apache-2.0
//
// hdsearch - hierarchical dictionary search for greedy sparse recovery
// Copyright (C) 2026 The hdsearch authors
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

#include "hdsearch/errors.hpp"
#include "hdsearch/experiments.hpp"
#include "hdsearch/recovery.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace hdsearch;

namespace
{
    ExperimentConfig parse_config(const std::string &text) { return config_from_json(nlohmann::json::parse(text)); }

    py::dict row_dict(const MetricRow &r)
    {
        py::dict d;
        d["method"] = r.method;
        d["scenario"] = r.scenario;
        d["n"] = r.branching ? py::object(py::int_(*r.branching)) : py::object(py::none());
        d["S_or_A"] = r.resolution;
        d["sel_mults"] = r.sel_mults;
        d["total_mults"] = r.total_mults;
        d["metric"] = r.metric;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        return d;
    }

    py::dict result_dict(const RecoveryResult &r)
    {
        std::vector<std::vector<double>> params;
        for (const auto &s : r.support)
            params.push_back(s.params);
        py::dict d;
        d["params"] = params;
        d["coefficients"] = r.coefficients;
        d["estimate"] = r.estimate;
        d["residual"] = r.residual;
        d["residual_norms"] = r.residual_norms;
        d["iterations"] = r.iterations;
        d["selection_mults"] = r.ops.selection_mults;
        d["total_mults"] = r.ops.total_mults();
        return d;
    }

    StoppingRule stop_rule(std::size_t iterations, double ratio)
    {
        return ratio > 0.0 ? StoppingRule::threshold(ratio, iterations) : StoppingRule::fixed(iterations);
    }

    std::vector<Dictionary> classical_dicts(const std::vector<ObservationGrid> &grids,
                                            const std::vector<std::size_t> &sizes)
    {
        if (grids.size() != sizes.size())
            throw ArityMismatch("one dictionary size per grid expected");
        std::vector<Dictionary> dicts;
        for (std::size_t d = 0; d < grids.size(); ++d)
            dicts.push_back(build_classical(grids[d], grids[d].default_domain(), sizes[d]));
        return dicts;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hierarchical dictionary search and greedy sparse recovery";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::enum_<GridKind>(m, "GridKind").value("Frequency", GridKind::Frequency).value("Space", GridKind::Space);

    py::class_<TargetDomain>(m, "TargetDomain")
        .def(py::init([](double lo, double hi) { return TargetDomain{lo, hi}; }), py::arg("u_min"), py::arg("u_max"))
        .def_readwrite("u_min", &TargetDomain::u_min)
        .def_readwrite("u_max", &TargetDomain::u_max)
        .def_property_readonly("width", &TargetDomain::width)
        .def("__repr__", [](const TargetDomain &d)
             { return "TargetDomain(" + std::to_string(d.u_min) + ", " + std::to_string(d.u_max) + ")"; });

    py::class_<ObservationGrid>(m, "ObservationGrid")
        .def_static("frequency", &ObservationGrid::frequency, py::arg("count"), py::arg("delta_f"))
        .def_static("space", &ObservationGrid::space, py::arg("count"), py::arg("spacing") = 0.5)
        .def_property_readonly("kind", &ObservationGrid::kind)
        .def_property_readonly("size", &ObservationGrid::size)
        .def_property_readonly("spacing", &ObservationGrid::spacing)
        .def_property_readonly("values", &ObservationGrid::values)
        .def("default_domain", &ObservationGrid::default_domain);

    m.def("atomic_signal", &atomic_signal, py::arg("grid"), py::arg("u"));
    m.def(
        "meta_atom", [](const ObservationGrid &g, double c, double L) { return meta_atom(g, c, L); }, py::arg("grid"),
        py::arg("center"), py::arg("width"));
    m.def(
        "response_profile",
        [](const CVector &atom, const ObservationGrid &g, const std::vector<double> &u)
        { return response_profile(atom, g, u); },
        py::arg("atom"), py::arg("grid"), py::arg("u"));
    m.def(
        "classical_dictionary",
        [](const ObservationGrid &g, std::size_t A)
        {
            const Dictionary d = build_classical(g, g.default_domain(), A);
            return py::make_tuple(d.atoms(), d.params());
        },
        py::arg("grid"), py::arg("num_atoms"), "Returns (atoms N x A, parameters) over the grid's default domain");

    m.def(
        "hsearch",
        [](const CVector &residual, const ObservationGrid &g, std::uint64_t n, std::uint64_t S)
        {
            OpCounter c;
            const HSearchOutcome o = hsearch_1d(residual, g.default_domain(), g, {n, S}, c);
            return py::make_tuple(o.u_star, o.leaf_index, o.correlation(), o.mults);
        },
        py::arg("residual"), py::arg("grid"), py::arg("n"), py::arg("S"),
        "Returns (u_star, leaf_index, correlation, selection_mults)");

    m.def(
        "omp",
        [](const CVector &y, const ObservationGrid &g, std::size_t A, std::size_t iterations, double ratio)
        {
            OpCounter c;
            return result_dict(omp(y, build_classical(g, g.default_domain(), A), stop_rule(iterations, ratio), c));
        },
        py::arg("y"), py::arg("grid"), py::arg("num_atoms"), py::arg("iterations"), py::arg("ratio") = 0.0);
    m.def(
        "homp",
        [](const CVector &y, const ObservationGrid &g, std::uint64_t n, std::uint64_t S, std::size_t iterations,
           double ratio)
        {
            OpCounter c;
            return result_dict(homp(y, g, g.default_domain(), {n, S}, stop_rule(iterations, ratio), c));
        },
        py::arg("y"), py::arg("grid"), py::arg("n"), py::arg("S"), py::arg("iterations"), py::arg("ratio") = 0.0);
    m.def(
        "momp",
        [](const CVector &y, const std::vector<ObservationGrid> &grids, const std::vector<std::size_t> &sizes,
           std::size_t iterations)
        {
            OpCounter c;
            return result_dict(momp(y, classical_dicts(grids, sizes), StoppingRule::fixed(iterations), c));
        },
        py::arg("y"), py::arg("grids"), py::arg("sizes"), py::arg("iterations"));
    m.def(
        "mhomp",
        [](const CVector &y, const std::vector<ObservationGrid> &grids, std::uint64_t n,
           const std::vector<std::uint64_t> &steps, std::size_t iterations)
        {
            if (grids.size() != steps.size())
                throw ArityMismatch("one step count per grid expected");
            std::vector<TargetDomain> doms;
            std::vector<HSearchConfig> cfgs;
            for (std::size_t d = 0; d < grids.size(); ++d)
            {
                doms.push_back(grids[d].default_domain());
                cfgs.push_back({n, steps[d]});
            }
            OpCounter c;
            return result_dict(mhomp(y, grids, doms, cfgs, StoppingRule::fixed(iterations), c));
        },
        py::arg("y"), py::arg("grids"), py::arg("n"), py::arg("steps"), py::arg("iterations"));

    m.def(
        "predict_selection_mults",
        [](const std::string &method, const std::vector<std::uint64_t> &dims, const std::vector<std::uint64_t> &sizes,
           std::uint64_t n) { return predicted_selection_mults(selection_method_from_string(method), dims, sizes, n); },
        py::arg("method"), py::arg("dims"), py::arg("sizes"), py::arg("n") = 0);

    m.def(
        "default_config", [](const std::string &s) { return to_json(default_config(scenario_from_string(s))).dump(); },
        py::arg("scenario"));
    m.def(
        "normalize_config", [](const std::string &text) { return to_json(parse_config(text)).dump(); },
        py::arg("config_json"));
    m.def(
        "run_experiment",
        [](const std::string &text)
        {
            const ExperimentConfig cfg = parse_config(text);
            std::vector<MetricRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_experiment(cfg);
            }
            py::list out;
            for (const auto &r : rows)
                out.append(row_dict(r));
            return out;
        },
        py::arg("config_json"));
    m.def(
        "gen_dataset",
        [](const std::string &text)
        {
            std::ostringstream out;
            gen_dataset(parse_config(text), out);
            return out.str();
        },
        py::arg("config_json"), "JSON-lines text, one record per trial");

    m.attr("csv_header") = csv_header;
#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
