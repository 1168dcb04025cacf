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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace hdsearch
{
    namespace
    {
        const std::vector<std::string> &methods_for(Scenario s)
        {
            static const std::vector<std::string> delay{"classical", "hierarchical"};
            static const std::vector<std::string> nmse1{"omp", "mp", "homp"};
            static const std::vector<std::string> nmse3{"omp", "momp", "mhomp"};
            switch (s)
            {
            case Scenario::Delay1D:
                return delay;
            case Scenario::Nmse1D:
                return nmse1;
            case Scenario::Nmse3D:
                return nmse3;
            }
            return delay;
        }

        std::vector<std::uint64_t> powers_of_two(std::initializer_list<std::uint64_t> exps)
        {
            std::vector<std::uint64_t> out;
            for (auto e : exps)
                out.push_back(std::uint64_t{1} << e);
            return out;
        }

        template <typename T>
        std::vector<T> as_vector(const nlohmann::json &v, const char *key)
        {
            try
            {
                if (v.is_array())
                    return v.get<std::vector<T>>();
                return {v.get<T>()};
            }
            catch (const nlohmann::json::exception &e)
            {
                throw ConfigError(std::string("config: bad value for '") + key + "': " + e.what());
            }
        }

        std::uint64_t as_count(const nlohmann::json &v, const char *key)
        {
            if (!v.is_number())
                throw ConfigError(std::string("config: '") + key + "' must be a number");
            const double d = v.get<double>();
            if (!(d >= 0.0) || d > 1.8e19 || std::floor(d) != d)
                throw ConfigError(std::string("config: '") + key + "' must be a non-negative integer");
            return v.is_number_unsigned() ? v.get<std::uint64_t>() : static_cast<std::uint64_t>(d);
        }
    }

    std::string to_string(Scenario s)
    {
        switch (s)
        {
        case Scenario::Delay1D:
            return "delay_1d";
        case Scenario::Nmse1D:
            return "nmse_1d";
        case Scenario::Nmse3D:
            return "nmse_3d";
        }
        return "unknown";
    }

    Scenario scenario_from_string(const std::string &name)
    {
        for (auto s : {Scenario::Delay1D, Scenario::Nmse1D, Scenario::Nmse3D})
            if (to_string(s) == name)
                return s;
        throw ConfigError("unknown scenario '" + name + "'");
    }

    bool SweepPoint::hierarchical() const
    {
        return method == "hierarchical" || method == "homp" || method == "mhomp";
    }

    std::vector<ObservationGrid> ExperimentConfig::grids() const
    {
        std::vector<ObservationGrid> g;
        for (std::size_t d = 0; d < dims.size(); ++d)
            g.push_back(d == 0 ? ObservationGrid::frequency(dims[d], delta_f)
                               : ObservationGrid::space(dims[d], antenna_spacing));
        return g;
    }

    std::vector<TargetDomain> ExperimentConfig::target_domains() const
    {
        if (!domains.empty())
            return domains;
        std::vector<TargetDomain> out;
        for (const auto &g : grids())
            out.push_back(g.default_domain());
        return out;
    }

    void ExperimentConfig::validate() const
    {
        if (dims.empty() || std::any_of(dims.begin(), dims.end(), [](std::size_t n) { return n == 0; }))
            throw ConfigError("config: dims must be a non-empty list of positive sizes");
        if (scenario != Scenario::Nmse3D && dims.size() != 1)
            throw ConfigError("config: scenario " + to_string(scenario) + " takes exactly one dimension");
        if (!(delta_f > 0.0) || !std::isfinite(delta_f) || !(antenna_spacing > 0.0) || !std::isfinite(antenna_spacing))
            throw ConfigError("config: delta_f and antenna_spacing must be positive");
        if (!domains.empty())
        {
            if (domains.size() != dims.size())
                throw ConfigError("config: need one domain per dimension");
            for (const auto &d : domains)
            {
                try
                {
                    d.validate();
                }
                catch (const EmptyDomain &e)
                {
                    throw ConfigError(std::string("config: ") + e.what());
                }
            }
        }
        if (paths < 1)
            throw ConfigError("config: paths must be >= 1");
        if (scenario == Scenario::Delay1D && paths != 1)
            throw ConfigError("config: delay_1d works on single-path observations (paths = 1)");
        if (trials < 1)
            throw ConfigError("config: trials must be >= 1");
        if (std::isnan(snr_db) || snr_db == -std::numeric_limits<double>::infinity())
            throw ConfigError("config: snr_db must be a number or +inf");
        if (varying_snr && std::isinf(snr_db))
            throw ConfigError("config: varying_snr needs a finite snr_db");
        if (!on_grid.empty() && (on_grid.size() != dims.size() ||
                                 std::any_of(on_grid.begin(), on_grid.end(), [](auto a) { return a == 0; })))
            throw ConfigError("config: on_grid needs one positive bin count per dimension");
        if (sweep.empty())
            throw ConfigError("config: sweep is empty");

        const auto &allowed = methods_for(scenario);
        for (const auto &p : sweep)
        {
            if (std::find(allowed.begin(), allowed.end(), p.method) == allowed.end())
                throw ConfigError("config: method '" + p.method + "' is not available for " + to_string(scenario));
            if (p.resolution.size() != dims.size())
                throw ConfigError("config: sweep point for '" + p.method + "' needs " +
                                  std::to_string(dims.size()) + " resolution values");
            if (std::any_of(p.resolution.begin(), p.resolution.end(), [](auto a) { return a == 0; }))
                throw ConfigError("config: resolutions must be positive");
            if (p.hierarchical())
            {
                if (p.branching < 2)
                    throw ConfigError("config: branching factor n must be >= 2");
                for (auto s : p.resolution)
                    if (std::pow(static_cast<double>(p.branching), static_cast<double>(s)) > 9007199254740992.0)
                        throw ConfigError("config: n^S exceeds 2^53");
            }
        }
    }

    ExperimentConfig default_config(Scenario s)
    {
        ExperimentConfig cfg;
        cfg.scenario = s;
        switch (s)
        {
        case Scenario::Delay1D:
            cfg.dims = {256};
            cfg.paths = 1;
            cfg.trials = 1000;
            for (std::uint64_t e = 2; e <= 10; ++e)
                cfg.sweep.push_back({"classical", 2, {std::uint64_t{1} << e}});
            for (std::uint64_t e = 2; e <= 10; ++e)
                cfg.sweep.push_back({"hierarchical", 2, {e}});
            break;
        case Scenario::Nmse1D:
            cfg.dims = {256};
            cfg.paths = 3;
            cfg.trials = 1000;
            for (std::uint64_t e = 4; e <= 12; ++e)
                cfg.sweep.push_back({"omp", 2, {std::uint64_t{1} << e}});
            for (std::uint64_t e = 4; e <= 12; ++e)
                cfg.sweep.push_back({"homp", 2, {e}});
            break;
        case Scenario::Nmse3D:
            cfg.dims = {64, 16, 8};
            cfg.paths = 5;
            cfg.trials = 200;
            cfg.sweep.push_back({"omp", 2, powers_of_two({3, 2, 1})});
            cfg.sweep.push_back({"omp", 2, powers_of_two({4, 3, 2})});
            for (std::uint64_t k = 0; k <= 3; ++k)
                cfg.sweep.push_back({"momp", 2, powers_of_two({6 + k, 4 + k, 3 + k})});
            for (std::uint64_t k = 0; k <= 3; ++k)
                cfg.sweep.push_back({"mhomp", 2, {6 + k, 4 + k, 3 + k}});
            break;
        }
        return cfg;
    }

    ExperimentConfig config_from_json(const nlohmann::json &j)
    {
        if (!j.is_object())
            throw ConfigError("config: top level must be a JSON object");
        static const std::set<std::string> known{"scenario", "dims", "delta_f", "antenna_spacing", "domains",
                                                 "paths", "trials", "snr_db", "varying_snr", "circular_mae", "on_grid",
                                                 "sweep", "master_seed", "budget", "threads"};
        for (const auto &[key, _] : j.items())
            if (!known.count(key))
                throw ConfigError("config: unknown key '" + key + "'");
        if (!j.contains("scenario") || !j["scenario"].is_string())
            throw ConfigError("config: 'scenario' is required");

        ExperimentConfig cfg = default_config(scenario_from_string(j["scenario"].get<std::string>()));
        try
        {
            if (j.contains("dims"))
            {
                cfg.dims.clear();
                for (const auto &v : j["dims"])
                    cfg.dims.push_back(static_cast<std::size_t>(as_count(v, "dims")));
            }
            if (j.contains("delta_f"))
                cfg.delta_f = j["delta_f"].get<double>();
            if (j.contains("antenna_spacing"))
                cfg.antenna_spacing = j["antenna_spacing"].get<double>();
            if (j.contains("domains"))
            {
                cfg.domains.clear();
                for (const auto &d : j["domains"])
                {
                    const auto v = d.get<std::vector<double>>();
                    if (v.size() != 2)
                        throw ConfigError("config: each domain is [u_min, u_max]");
                    cfg.domains.push_back({v[0], v[1]});
                }
            }
            if (j.contains("paths"))
                cfg.paths = static_cast<std::size_t>(as_count(j["paths"], "paths"));
            if (j.contains("trials"))
                cfg.trials = static_cast<std::size_t>(as_count(j["trials"], "trials"));
            if (j.contains("snr_db"))
            {
                const auto &v = j["snr_db"];
                if (v.is_null() || (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "noiseless")))
                    cfg.snr_db = std::numeric_limits<double>::infinity();
                else
                    cfg.snr_db = v.get<double>();
            }
            if (j.contains("varying_snr"))
                cfg.varying_snr = j["varying_snr"].get<bool>();
            if (j.contains("circular_mae"))
                cfg.circular_mae = j["circular_mae"].get<bool>();
            if (j.contains("on_grid"))
                cfg.on_grid = as_vector<std::uint64_t>(j["on_grid"], "on_grid");
            if (j.contains("sweep"))
            {
                cfg.sweep.clear();
                for (const auto &p : j["sweep"])
                {
                    SweepPoint sp;
                    if (!p.contains("method"))
                        throw ConfigError("config: sweep point without 'method'");
                    sp.method = p["method"].get<std::string>();
                    if (p.contains("n"))
                        sp.branching = as_count(p["n"], "n");
                    if (sp.hierarchical())
                    {
                        if (!p.contains("S"))
                            throw ConfigError("config: hierarchical sweep point needs 'S'");
                        sp.resolution = as_vector<std::uint64_t>(p["S"], "S");
                    }
                    else
                    {
                        if (!p.contains("A"))
                            throw ConfigError("config: classical sweep point needs 'A'");
                        sp.resolution = as_vector<std::uint64_t>(p["A"], "A");
                    }
                    cfg.sweep.push_back(std::move(sp));
                }
            }
            if (j.contains("master_seed"))
                cfg.master_seed = as_count(j["master_seed"], "master_seed");
            if (j.contains("budget"))
                cfg.budget = as_count(j["budget"], "budget");
            if (j.contains("threads"))
                cfg.threads = static_cast<std::size_t>(as_count(j["threads"], "threads"));
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError(std::string("config: ") + e.what());
        }
        cfg.validate();
        return cfg;
    }

    nlohmann::json to_json(const ExperimentConfig &cfg)
    {
        nlohmann::json j;
        j["scenario"] = to_string(cfg.scenario);
        j["dims"] = cfg.dims;
        j["delta_f"] = cfg.delta_f;
        j["antenna_spacing"] = cfg.antenna_spacing;
        if (!cfg.domains.empty())
        {
            j["domains"] = nlohmann::json::array();
            for (const auto &d : cfg.domains)
                j["domains"].push_back({d.u_min, d.u_max});
        }
        j["paths"] = cfg.paths;
        j["trials"] = cfg.trials;
        if (std::isinf(cfg.snr_db))
            j["snr_db"] = nullptr;
        else
            j["snr_db"] = cfg.snr_db;
        j["varying_snr"] = cfg.varying_snr;
        j["circular_mae"] = cfg.circular_mae;
        if (!cfg.on_grid.empty())
            j["on_grid"] = cfg.on_grid;
        j["sweep"] = nlohmann::json::array();
        for (const auto &p : cfg.sweep)
        {
            nlohmann::json sp;
            sp["method"] = p.method;
            if (p.hierarchical())
            {
                sp["n"] = p.branching;
                sp["S"] = p.resolution;
            }
            else
                sp["A"] = p.resolution;
            j["sweep"].push_back(sp);
        }
        j["master_seed"] = cfg.master_seed;
        j["budget"] = cfg.budget;
        j["threads"] = cfg.threads;
        return j;
    }

    ExperimentConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("config: cannot open '" + path + "'");
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError("config: '" + path + "' is not valid JSON: " + e.what());
        }
        return config_from_json(j);
    }
}
