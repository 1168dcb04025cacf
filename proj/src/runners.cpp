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

#include <algorithm>
#include <cmath>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace hdsearch
{
    namespace
    {
        // Runs body(i) for i in [0, count) on a small pool. Results must be written to per-index slots;
        // the first exception is rethrown after all workers have joined.
        template <typename Body>
        void parallel_for(std::size_t count, std::size_t threads, Body &&body)
        {
            if (threads == 0)
                threads = std::max(1u, std::thread::hardware_concurrency());
            threads = std::min(threads, count);
            if (threads <= 1)
            {
                for (std::size_t i = 0; i < count; ++i)
                    body(i);
                return;
            }

            std::atomic<std::size_t> next{0};
            std::exception_ptr error;
            std::mutex error_mutex;
            {
                std::vector<std::jthread> pool;
                for (std::size_t w = 0; w < threads; ++w)
                    pool.emplace_back([&]
                                      {
                        for (std::size_t i = next++; i < count; i = next++)
                        {
                            try
                            {
                                body(i);
                            }
                            catch (...)
                            {
                                std::lock_guard lock(error_mutex);
                                if (!error)
                                    error = std::current_exception();
                                next = count;
                            }
                        } });
            }
            if (error)
                std::rethrow_exception(error);
        }

        struct TrialOutcome
        {
            OpCounter ops;
            double estimate = 0.0; // delay estimate (delay_1d)
            CVector channel;       // channel estimate (nmse scenarios)
        };

        std::string join_resolution(const SweepPoint &p)
        {
            std::string out;
            for (std::size_t d = 0; d < p.resolution.size(); ++d)
            {
                if (d)
                    out += 'x';
                out += std::to_string(p.resolution[d]);
            }
            return out;
        }

        MetricRow make_row(const ExperimentConfig &cfg, const SweepPoint &p, std::span<const TrialOutcome> outcomes,
                           double metric)
        {
            MetricRow row;
            row.method = p.method;
            row.scenario = to_string(cfg.scenario);
            if (p.hierarchical())
                row.branching = p.branching;
            row.resolution = join_resolution(p);
            // integer sums, so the averages do not depend on the thread count
            std::uint64_t sel = 0, total = 0;
            for (const auto &o : outcomes)
            {
                sel += o.ops.selection_mults;
                total += o.ops.total_mults();
            }
            const double B = static_cast<double>(outcomes.size());
            row.sel_mults = static_cast<double>(sel) / B;
            row.total_mults = static_cast<double>(total) / B;
            row.metric = metric;
            row.trials = outcomes.size();
            row.seed = cfg.master_seed;
            return row;
        }

        std::vector<Trial> build_trials(const ExperimentConfig &cfg)
        {
            std::vector<Trial> trials(cfg.trials);
            parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) { trials[i] = make_trial(cfg, i); });
            return trials;
        }

        void require_scenario(const ExperimentConfig &cfg, Scenario s)
        {
            if (cfg.scenario != s)
                throw ConfigError("config: expected scenario " + to_string(s) + ", got " + to_string(cfg.scenario));
            cfg.validate();
            check_budget(cfg);
        }

        double nmse_of(const std::vector<Trial> &trials, const std::vector<TrialOutcome> &outcomes)
        {
            std::vector<CVector> est, truth;
            est.reserve(trials.size());
            truth.reserve(trials.size());
            for (std::size_t i = 0; i < trials.size(); ++i)
            {
                est.push_back(outcomes[i].channel);
                truth.push_back(trials[i].h);
            }
            return nmse(est, truth);
        }
    }

    std::uint64_t predicted_sweep_mults(const ExperimentConfig &cfg, const SweepPoint &p)
    {
        std::vector<std::uint64_t> dims(cfg.dims.begin(), cfg.dims.end());
        SelectionMethod m;
        if (cfg.scenario == Scenario::Nmse3D)
            m = p.method == "omp"    ? SelectionMethod::Classical3D
                : p.method == "momp" ? SelectionMethod::MultiDimClassical
                                     : SelectionMethod::MultiDimHier;
        else
            m = p.hierarchical() ? SelectionMethod::Hier1D : SelectionMethod::Classical1D;
        return predicted_selection_mults(m, dims, p.resolution, p.hierarchical() ? p.branching : 0);
    }

    void check_budget(const ExperimentConfig &cfg)
    {
        for (const auto &p : cfg.sweep)
        {
            std::uint64_t predicted = 0;
            try
            {
                predicted = predicted_sweep_mults(cfg, p);
            }
            catch (const std::overflow_error &)
            {
                throw BudgetExceeded("budget exceeded: " + p.method + " at resolution " + join_resolution(p) +
                                         " needs more than 2^64 selection multiplications per iteration",
                                     UINT64_MAX, cfg.budget);
            }
            if (predicted > cfg.budget)
            {
                char sci[32];
                std::snprintf(sci, sizeof(sci), "%.3e", static_cast<double>(predicted));
                throw BudgetExceeded("budget exceeded: " + p.method + " at resolution " + join_resolution(p) +
                                         " predicts " + std::to_string(predicted) + " (" + sci +
                                         ") selection multiplications per iteration, ceiling is " +
                                         std::to_string(cfg.budget),
                                     predicted, cfg.budget);
            }
        }
    }

    std::vector<MetricRow> run_delay_estimation(const ExperimentConfig &cfg)
    {
        require_scenario(cfg, Scenario::Delay1D);
        const ObservationGrid grid = cfg.grids()[0];
        const TargetDomain domain = cfg.target_domains()[0];
        const std::vector<Trial> trials = build_trials(cfg);

        // Only a domain covering the whole period can alias one end onto the other
        const double ambiguity = 1.0 / grid.spacing();
        const bool full_period = std::abs(domain.width() - ambiguity) <= 1e-9 * ambiguity;
        const double period = cfg.circular_mae && full_period ? ambiguity : 0.0;

        std::vector<double> truths(trials.size());
        for (std::size_t i = 0; i < trials.size(); ++i)
            truths[i] = trials[i].paths.paths[0].params[0];

        std::vector<MetricRow> rows;
        for (const auto &p : cfg.sweep)
        {
            std::vector<TrialOutcome> outcomes(trials.size());
            if (p.hierarchical())
            {
                const HSearchConfig hc{p.branching, p.resolution[0]};
                parallel_for(trials.size(), cfg.threads, [&](std::size_t i)
                             {
                    const HSearchOutcome out = hsearch_1d(trials[i].obs.y, domain, grid, hc, outcomes[i].ops);
                    outcomes[i].estimate = out.u_star; });
            }
            else
            {
                const Dictionary dict = build_classical(grid, domain, p.resolution[0]);
                parallel_for(trials.size(), cfg.threads, [&](std::size_t i)
                             {
                    const std::size_t j = select_exhaustive(dict, trials[i].obs.y, outcomes[i].ops);
                    outcomes[i].estimate = dict.params()[j]; });
            }
            std::vector<double> estimates(trials.size());
            for (std::size_t i = 0; i < trials.size(); ++i)
                estimates[i] = outcomes[i].estimate;
            rows.push_back(make_row(cfg, p, outcomes, mae(estimates, truths, period)));
        }
        return rows;
    }

    std::vector<MetricRow> run_nmse_1d(const ExperimentConfig &cfg)
    {
        require_scenario(cfg, Scenario::Nmse1D);
        const ObservationGrid grid = cfg.grids()[0];
        const TargetDomain domain = cfg.target_domains()[0];
        const std::vector<Trial> trials = build_trials(cfg);
        const StoppingRule stop = StoppingRule::fixed(cfg.paths);

        std::vector<MetricRow> rows;
        for (const auto &p : cfg.sweep)
        {
            std::vector<TrialOutcome> outcomes(trials.size());
            if (p.method == "homp")
            {
                const HSearchConfig hc{p.branching, p.resolution[0]};
                parallel_for(trials.size(), cfg.threads, [&](std::size_t i)
                             { outcomes[i].channel = homp(trials[i].obs.y, grid, domain, hc, stop, outcomes[i].ops).estimate; });
            }
            else
            {
                const Dictionary dict = build_classical(grid, domain, p.resolution[0]);
                const bool use_mp = p.method == "mp";
                parallel_for(trials.size(), cfg.threads, [&](std::size_t i)
                             {
                    const auto &y = trials[i].obs.y;
                    outcomes[i].channel = use_mp ? mp(y, dict, stop, outcomes[i].ops).estimate
                                                 : omp(y, dict, stop, outcomes[i].ops).estimate; });
            }
            rows.push_back(make_row(cfg, p, outcomes, nmse_of(trials, outcomes)));
        }
        return rows;
    }

    std::vector<MetricRow> run_nmse_3d(const ExperimentConfig &cfg)
    {
        require_scenario(cfg, Scenario::Nmse3D);
        const auto grids = cfg.grids();
        const auto domains = cfg.target_domains();
        const std::vector<Trial> trials = build_trials(cfg);
        const StoppingRule stop = StoppingRule::fixed(cfg.paths);

        std::vector<MetricRow> rows;
        for (const auto &p : cfg.sweep)
        {
            std::vector<TrialOutcome> outcomes(trials.size());
            if (p.method == "mhomp")
            {
                std::vector<HSearchConfig> hcs;
                for (auto s : p.resolution)
                    hcs.push_back({p.branching, s});
                parallel_for(trials.size(), cfg.threads, [&](std::size_t i)
                             { outcomes[i].channel =
                                   mhomp(trials[i].obs.y, grids, domains, hcs, stop, outcomes[i].ops).estimate; });
            }
            else
            {
                std::vector<Dictionary> dicts;
                for (std::size_t d = 0; d < grids.size(); ++d)
                    dicts.push_back(build_classical(grids[d], domains[d], p.resolution[d]));
                const bool joint = p.method == "omp";
                parallel_for(trials.size(), cfg.threads, [&](std::size_t i)
                             {
                    const auto &y = trials[i].obs.y;
                    outcomes[i].channel = joint ? omp_kronecker(y, dicts, stop, outcomes[i].ops).estimate
                                                : momp(y, dicts, stop, outcomes[i].ops).estimate; });
            }
            rows.push_back(make_row(cfg, p, outcomes, nmse_of(trials, outcomes)));
        }
        return rows;
    }

    std::vector<MetricRow> run_experiment(const ExperimentConfig &cfg)
    {
        switch (cfg.scenario)
        {
        case Scenario::Delay1D:
            return run_delay_estimation(cfg);
        case Scenario::Nmse1D:
            return run_nmse_1d(cfg);
        case Scenario::Nmse3D:
            return run_nmse_3d(cfg);
        }
        throw ConfigError("unknown scenario");
    }
}
