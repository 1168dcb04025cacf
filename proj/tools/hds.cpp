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

// hds: dataset generation, experiment runners and complexity predictions.
//
// Exit codes: 0 success, 1 runtime/IO failure, 2 configuration error, 3 budget refusal.

#include "hdsearch/dictionary.hpp"
#include "hdsearch/errors.hpp"
#include "hdsearch/experiments.hpp"
#include "hdsearch/opcount.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace
{
    using namespace hdsearch;

    constexpr int exit_runtime = 1;
    constexpr int exit_config = 2;
    constexpr int exit_budget = 3;

    struct RunOptions
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> budget;
        std::optional<std::size_t> threads;
        std::string out;
        std::string manifest;
    };

    void add_run_options(CLI::App *cmd, RunOptions &opt)
    {
        cmd->add_option("--config", opt.config_path, "JSON experiment configuration (defaults per scenario if omitted)");
        cmd->add_option("--seed", opt.seed, "Override master_seed");
        cmd->add_option("--budget", opt.budget, "Override the ceiling on predicted selection mults per iteration");
        cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");
        cmd->add_option("--out", opt.out, "Output path (stdout if omitted)");
        cmd->add_option("--manifest", opt.manifest, "Run manifest path (default <out>.manifest.json)");
    }

    ExperimentConfig resolve_config(const RunOptions &opt, Scenario scenario)
    {
        ExperimentConfig cfg = opt.config_path.empty() ? default_config(scenario) : load_config(opt.config_path);
        if (cfg.scenario != scenario)
            throw ConfigError("config scenario is " + to_string(cfg.scenario) + ", this command runs " +
                              to_string(scenario));
        if (opt.seed)
            cfg.master_seed = *opt.seed;
        if (opt.budget)
            cfg.budget = *opt.budget;
        if (opt.threads)
            cfg.threads = *opt.threads;
        cfg.validate();
        return cfg;
    }

    void write_manifest(const RunOptions &opt, const std::string &command, const ExperimentConfig &cfg,
                        double wall_time, std::size_t rows)
    {
        std::string path = opt.manifest;
        if (path.empty() && !opt.out.empty())
            path = opt.out + ".manifest.json";
        if (path.empty())
            return;
        nlohmann::json m;
        m["command"] = command;
        m["library_version"] = library_version();
        m["config"] = to_json(cfg);
        m["output"] = opt.out;
        m["rows"] = rows;
        m["wall_time_s"] = wall_time;
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot write manifest '" + path + "'");
        out << m.dump(2) << '\n';
    }

    int run_experiment_command(const RunOptions &opt, const std::string &command, Scenario scenario)
    {
        const ExperimentConfig cfg = resolve_config(opt, scenario);
        const auto start = std::chrono::steady_clock::now();
        const std::vector<MetricRow> rows = run_experiment(cfg);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (opt.out.empty())
            write_csv(std::cout, rows);
        else
            write_csv(opt.out, rows);
        write_manifest(opt, command, cfg, wall, rows.size());
        return 0;
    }

    int gen_dataset_command(const RunOptions &opt, const std::string &scenario_name)
    {
        ExperimentConfig cfg;
        if (opt.config_path.empty())
            cfg = default_config(scenario_from_string(scenario_name));
        else
            cfg = load_config(opt.config_path);
        if (opt.seed)
            cfg.master_seed = *opt.seed;
        cfg.validate();
        const auto start = std::chrono::steady_clock::now();
        if (opt.out.empty())
            gen_dataset(cfg, std::cout);
        else
            gen_dataset(cfg, opt.out);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest(opt, "gen-dataset", cfg, wall, cfg.trials);
        return 0;
    }

    struct PredictOptions
    {
        std::string method;
        std::vector<std::uint64_t> dims;
        std::vector<std::uint64_t> sizes;
        std::uint64_t branching = 2;
        std::string config_path;
    };

    int predict_command(const PredictOptions &opt)
    {
        nlohmann::json out = nlohmann::json::array();
        if (!opt.config_path.empty())
        {
            const ExperimentConfig cfg = load_config(opt.config_path);
            for (const auto &p : cfg.sweep)
                out.push_back({{"method", p.method},
                               {"resolution", p.resolution},
                               {"selection_mults", predicted_sweep_mults(cfg, p)},
                               {"within_budget", predicted_sweep_mults(cfg, p) <= cfg.budget}});
        }
        else
        {
            if (opt.method.empty())
                throw ConfigError("predict-complexity needs --method or --config");
            const SelectionMethod m = selection_method_from_string(opt.method);
            const std::uint64_t n = is_hierarchical(m) ? opt.branching : 0;
            out.push_back({{"method", opt.method},
                           {"dims", opt.dims},
                           {"sizes", opt.sizes},
                           {"branching", n},
                           {"selection_mults", predicted_selection_mults(m, opt.dims, opt.sizes, n)},
                           {"correlations", predicted_correlations(m, opt.sizes, n)}});
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    struct ProfileOptions
    {
        std::string kind = "frequency";
        std::size_t count = 256;
        double spacing = 1.0;
        double center = 0.5;
        double width = 0.0;
        std::size_t samples = 4096;
        std::string out;
    };

    int profile_command(const ProfileOptions &opt)
    {
        const ObservationGrid grid = ObservationGrid::uniform(grid_kind_from_string(opt.kind), opt.count, opt.spacing);
        const TargetDomain dom = grid.default_domain();
        const CVector atom = opt.width > 0.0
                                 ? meta_atom(grid, opt.center, opt.width)
                                 : CVector(atomic_signal(grid, opt.center) / std::sqrt(static_cast<double>(opt.count)));
        std::vector<double> u(opt.samples);
        for (std::size_t i = 0; i < opt.samples; ++i)
            u[i] = dom.u_min + dom.width() * static_cast<double>(i) / static_cast<double>(opt.samples);
        const std::vector<double> mag = response_profile(atom, grid, u);
        if (opt.out.empty())
            write_profile_csv(std::cout, u, mag);
        else
        {
            std::ofstream f(opt.out);
            if (!f)
                throw IoError("cannot open '" + opt.out + "'");
            write_profile_csv(f, u, mag);
        }
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"hds - hierarchical dictionary search experiments"};
    app.set_version_flag("--version", library_version());
    app.require_subcommand(1);

    RunOptions gen_opt, delay_opt, nmse1_opt, nmse3_opt;
    std::string gen_scenario = "delay_1d";
    auto *gen = app.add_subcommand("gen-dataset", "Write a JSON-lines dataset of simulated observations");
    add_run_options(gen, gen_opt);
    gen->add_option("--scenario", gen_scenario, "Scenario for the default configuration when --config is omitted");

    auto *delay = app.add_subcommand("run-delay-est", "Single-path delay estimation: MAE vs. multiplications");
    add_run_options(delay, delay_opt);
    auto *nmse1 = app.add_subcommand("run-nmse-1d", "1-D channel estimation: OMP vs. HOMP");
    add_run_options(nmse1, nmse1_opt);
    auto *nmse3 = app.add_subcommand("run-nmse-3d", "3-D channel estimation: OMP, MOMP, MHOMP");
    add_run_options(nmse3, nmse3_opt);

    PredictOptions pred_opt;
    auto *pred = app.add_subcommand("predict-complexity", "Predicted selection multiplications per greedy iteration");
    pred->add_option("--method", pred_opt.method,
                     "classical_1d | hier_1d | classical_3d | multidim_classical | multidim_hier");
    pred->add_option("--dims", pred_opt.dims, "N_d, Kronecker order")->delimiter(',');
    pred->add_option("--sizes", pred_opt.sizes, "A_d (classical) or S_d (hierarchical)")->delimiter(',');
    pred->add_option("--branching,-n", pred_opt.branching, "Branching factor n");
    pred->add_option("--config", pred_opt.config_path, "Predict every sweep point of an experiment configuration");

    ProfileOptions prof_opt;
    auto *prof = app.add_subcommand("response-profile", "Response magnitude of an atom or meta-atom (u,magnitude CSV)");
    prof->add_option("--kind", prof_opt.kind, "frequency | space");
    prof->add_option("--count", prof_opt.count, "Grid size N");
    prof->add_option("--spacing", prof_opt.spacing, "Grid spacing");
    prof->add_option("--center", prof_opt.center, "Atom center");
    prof->add_option("--width", prof_opt.width, "Meta-atom width L (0: classical atom)");
    prof->add_option("--samples", prof_opt.samples, "Number of u samples over one period");
    prof->add_option("--out", prof_opt.out, "Output CSV (stdout if omitted)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try
    {
        if (*gen)
            return gen_dataset_command(gen_opt, gen_scenario);
        if (*delay)
            return run_experiment_command(delay_opt, "run-delay-est", Scenario::Delay1D);
        if (*nmse1)
            return run_experiment_command(nmse1_opt, "run-nmse-1d", Scenario::Nmse1D);
        if (*nmse3)
            return run_experiment_command(nmse3_opt, "run-nmse-3d", Scenario::Nmse3D);
        if (*pred)
            return predict_command(pred_opt);
        if (*prof)
            return profile_command(prof_opt);
    }
    catch (const BudgetExceeded &e)
    {
        std::cerr << "hds: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "hds: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "hds: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_config;
}
