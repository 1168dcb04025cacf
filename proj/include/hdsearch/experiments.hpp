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

#ifndef HDSEARCH_EXPERIMENTS_HPP
#define HDSEARCH_EXPERIMENTS_HPP

#include "hdsearch/opcount.hpp"
#include "hdsearch/signal_model.hpp"
#include "hdsearch/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdsearch
{
    enum class Scenario
    {
        Delay1D, // single-path delay estimation, MAE vs. multiplications
        Nmse1D,  // multi-path channel estimation on one subcarrier axis
        Nmse3D   // multi-path channel estimation on subcarriers x BS antennas x UE antennas
    };

    std::string to_string(Scenario s);
    Scenario scenario_from_string(const std::string &name);

    // One point of a sweep. Methods by scenario:
    //   delay_1d  classical (A), hierarchical (n, S)
    //   nmse_1d   omp (A), mp (A), homp (n, S)
    //   nmse_3d   omp (A_d, full Kronecker dictionary), momp (A_d), mhomp (n, S_d)
    struct SweepPoint
    {
        std::string method;
        std::uint64_t branching = 2;
        std::vector<std::uint64_t> resolution; // A or A_d for classical methods, S or S_d for hierarchical ones

        bool hierarchical() const;
    };

    struct ExperimentConfig
    {
        Scenario scenario = Scenario::Delay1D;
        std::vector<std::size_t> dims{256};     // Kronecker order: subcarriers, BS antennas, UE antennas
        double delta_f = 1.44e6;                // pilot subcarrier spacing [Hz]
        double antenna_spacing = 0.5;           // [wavelengths]
        std::vector<TargetDomain> domains;      // empty: one period per grid
        std::size_t paths = 1;                  // K
        std::size_t trials = 1000;              // B
        double snr_db = 10.0;                   // +inf: noiseless
        bool varying_snr = false;               // per-trial SNR ~ U(snr_db - 5, snr_db + 5)
        bool circular_mae = true;               // delay_1d: score errors modulo the grid's ambiguity period
        std::vector<std::uint64_t> on_grid;     // snap drawn parameters to the centers of this many bins per dim
        std::vector<SweepPoint> sweep;
        std::uint64_t master_seed = 1;
        std::uint64_t budget = 10'000'000'000ULL; // ceiling on predicted selection mults per greedy iteration
        std::size_t threads = 0;                // 0: hardware concurrency

        std::vector<ObservationGrid> grids() const;
        std::vector<TargetDomain> target_domains() const;

        // Throws ConfigError
        void validate() const;
    };

    // Defaults for the three experiments: N_S = 256, delta_f = 1.44 MHz, B = 1000, 10 dB; K = 1, 3 and 5;
    // the 3-D scenario at desk scale (64, 16, 8) with B = 200.
    ExperimentConfig default_config(Scenario s);

    ExperimentConfig config_from_json(const nlohmann::json &j);
    nlohmann::json to_json(const ExperimentConfig &cfg);
    ExperimentConfig load_config(const std::string &path);

    // One simulated observation. Trial i draws its paths (and SNR when varying) from Rng(master_seed + i);
    // the noise comes from a separate stream seeded with noise_seed(master_seed + i).
    struct Trial
    {
        std::uint64_t index = 0;
        std::uint64_t seed = 0;
        PathSet paths;
        double snr_db = 0.0;
        CVector h;
        Observation obs;
    };

    std::uint64_t noise_seed(std::uint64_t trial_seed);

    Trial make_trial(const ExperimentConfig &cfg, std::uint64_t index);
    std::vector<Trial> make_trials(const ExperimentConfig &cfg);

    // JSON-lines dataset, one record per trial: {index, seed, grids, domains, paths, snr_db}.
    // snr_db is null for noiseless records. Complex vectors are not stored.
    nlohmann::json trial_record(const ExperimentConfig &cfg, const Trial &t);
    void gen_dataset(const ExperimentConfig &cfg, std::ostream &out);
    void gen_dataset(const ExperimentConfig &cfg, const std::string &path);

    // Rebuild the observation of a record (channel from the stored paths, noise from the stored seed)
    Trial trial_from_record(const nlohmann::json &record);

    // Mean absolute difference. With period > 0 each difference is taken modulo the period (distance on
    // the circle), since u and u + 1/spacing produce the same observation. Throws LengthMismatch for
    // unequal or empty inputs.
    double mae(std::span<const double> estimates, std::span<const double> truths, double period = 0.0);

    // (1/B) sum |h_hat_j - h_j|^2 / |h_j|^2. Throws LengthMismatch, ZeroTruth.
    double nmse(std::span<const CVector> estimates, std::span<const CVector> truths);

    struct MetricRow
    {
        std::string method;
        std::string scenario;
        std::optional<std::uint64_t> branching; // hierarchical methods only
        std::string resolution;                 // "A" or "S", per-dimension values joined by 'x'
        double sel_mults = 0.0;                 // per-trial average
        double total_mults = 0.0;               // per-trial average
        double metric = 0.0;                    // MAE [s] for delay_1d, linear NMSE otherwise
        std::uint64_t trials = 0;
        std::uint64_t seed = 0;
    };

    inline constexpr const char *csv_header = "method,scenario,n,S_or_A,sel_mults,total_mults,metric,trials,seed";

    void write_csv(std::ostream &out, std::span<const MetricRow> rows);
    void write_csv(const std::string &path, std::span<const MetricRow> rows);

    // Predicted selection multiplications per greedy iteration for one sweep point
    std::uint64_t predicted_sweep_mults(const ExperimentConfig &cfg, const SweepPoint &p);

    // Throws BudgetExceeded for the first sweep point whose prediction is above cfg.budget
    void check_budget(const ExperimentConfig &cfg);

    std::vector<MetricRow> run_delay_estimation(const ExperimentConfig &cfg);
    std::vector<MetricRow> run_nmse_1d(const ExperimentConfig &cfg);
    std::vector<MetricRow> run_nmse_3d(const ExperimentConfig &cfg);
    std::vector<MetricRow> run_experiment(const ExperimentConfig &cfg);

    // u,magnitude CSV of a response profile
    void write_profile_csv(std::ostream &out, std::span<const double> u, std::span<const double> magnitude);

    // Shortest round-trip decimal form
    std::string format_double(double v);

    std::string library_version();
}

#endif
