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

namespace hdsearch
{
    namespace
    {
        double snap_to_bin_center(double u, const TargetDomain &dom, std::uint64_t bins)
        {
            const double step = dom.width() / static_cast<double>(bins);
            auto idx = static_cast<std::int64_t>(std::floor((u - dom.u_min) / step));
            idx = std::clamp<std::int64_t>(idx, 0, static_cast<std::int64_t>(bins) - 1);
            // same arithmetic as bin_centers()
            return dom.u_min + (static_cast<double>(idx) + 0.5) * step;
        }
    }

    std::uint64_t noise_seed(std::uint64_t trial_seed)
    {
        // splitmix64 finalizer
        std::uint64_t z = trial_seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    Trial make_trial(const ExperimentConfig &cfg, std::uint64_t index)
    {
        const auto grids = cfg.grids();
        const auto domains = cfg.target_domains();

        Trial t;
        t.index = index;
        t.seed = Rng::trial_seed(cfg.master_seed, index);
        Rng rng(t.seed);
        t.paths = draw_paths(domains, cfg.paths, rng);
        if (!cfg.on_grid.empty())
            for (auto &p : t.paths.paths)
                for (std::size_t d = 0; d < p.params.size(); ++d)
                    p.params[d] = snap_to_bin_center(p.params[d], domains[d], cfg.on_grid[d]);
        t.snr_db = cfg.varying_snr ? rng.uniform(cfg.snr_db - 5.0, cfg.snr_db + 5.0) : cfg.snr_db;
        t.h = synth_channel(grids, t.paths);
        t.obs = add_noise(t.h, t.snr_db, noise_seed(t.seed));
        return t;
    }

    std::vector<Trial> make_trials(const ExperimentConfig &cfg)
    {
        std::vector<Trial> out;
        out.reserve(cfg.trials);
        for (std::size_t i = 0; i < cfg.trials; ++i)
            out.push_back(make_trial(cfg, i));
        return out;
    }

    nlohmann::json trial_record(const ExperimentConfig &cfg, const Trial &t)
    {
        nlohmann::json rec;
        rec["index"] = t.index;
        rec["seed"] = t.seed;
        rec["grids"] = nlohmann::json::array();
        for (const auto &g : cfg.grids())
            rec["grids"].push_back(
                {{"kind", to_string(g.kind())}, {"count", g.size()}, {"spacing", g.spacing()}, {"origin", g.origin()}});
        rec["domains"] = nlohmann::json::array();
        for (const auto &d : cfg.target_domains())
            rec["domains"].push_back({d.u_min, d.u_max});
        rec["paths"] = nlohmann::json::array();
        for (const auto &p : t.paths.paths)
            rec["paths"].push_back({{"gain", {p.gain.real(), p.gain.imag()}}, {"params", p.params}});
        if (std::isinf(t.snr_db))
            rec["snr_db"] = nullptr;
        else
            rec["snr_db"] = t.snr_db;
        return rec;
    }

    void gen_dataset(const ExperimentConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        for (std::size_t i = 0; i < cfg.trials; ++i)
            out << trial_record(cfg, make_trial(cfg, i)).dump() << '\n';
        if (!out)
            throw IoError("gen_dataset: write failed");
    }

    void gen_dataset(const ExperimentConfig &cfg, const std::string &path)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("gen_dataset: cannot open '" + path + "' for writing");
        gen_dataset(cfg, out);
    }

    Trial trial_from_record(const nlohmann::json &record)
    {
        try
        {
            std::vector<ObservationGrid> grids;
            for (const auto &g : record.at("grids"))
                grids.push_back(ObservationGrid::uniform(grid_kind_from_string(g.at("kind").get<std::string>()),
                                                         g.at("count").get<std::size_t>(),
                                                         g.at("spacing").get<double>(), g.at("origin").get<double>()));
            Trial t;
            t.index = record.at("index").get<std::uint64_t>();
            t.seed = record.at("seed").get<std::uint64_t>();
            for (const auto &p : record.at("paths"))
            {
                const auto gain = p.at("gain").get<std::vector<double>>();
                if (gain.size() != 2)
                    throw IoError("dataset record: gain must be [re, im]");
                t.paths.paths.push_back({{gain[0], gain[1]}, p.at("params").get<std::vector<double>>()});
            }
            const auto &snr = record.at("snr_db");
            t.snr_db = snr.is_null() ? std::numeric_limits<double>::infinity() : snr.get<double>();
            t.h = synth_channel(grids, t.paths);
            t.obs = add_noise(t.h, t.snr_db, noise_seed(t.seed));
            return t;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw IoError(std::string("dataset record: ") + e.what());
        }
    }
}
