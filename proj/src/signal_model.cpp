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

#include "hdsearch/signal_model.hpp"
#include "hdsearch/errors.hpp"

#include <cmath>
#include <limits>

namespace hdsearch
{
    std::string to_string(GridKind kind)
    {
        return kind == GridKind::Frequency ? "frequency" : "space";
    }

    GridKind grid_kind_from_string(const std::string &name)
    {
        if (name == "frequency")
            return GridKind::Frequency;
        if (name == "space")
            return GridKind::Space;
        throw std::invalid_argument("unknown grid kind '" + name + "'");
    }

    void TargetDomain::validate() const
    {
        if (!std::isfinite(u_min) || !std::isfinite(u_max) || !(u_max > u_min))
            throw EmptyDomain("target domain [" + std::to_string(u_min) + ", " + std::to_string(u_max) +
                              "] is empty or not finite");
    }

    ObservationGrid ObservationGrid::uniform(GridKind kind, std::size_t count, double spacing, double origin)
    {
        if (count == 0)
            throw std::invalid_argument("ObservationGrid: count must be positive");
        if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(origin))
            throw std::invalid_argument("ObservationGrid: spacing must be positive and finite");
        std::vector<double> values(count);
        for (std::size_t n = 0; n < count; ++n)
            values[n] = origin + static_cast<double>(n) * spacing;
        return ObservationGrid(kind, std::move(values), spacing);
    }

    ObservationGrid ObservationGrid::frequency(std::size_t count, double delta_f)
    {
        return uniform(GridKind::Frequency, count, delta_f);
    }

    ObservationGrid ObservationGrid::space(std::size_t count, double spacing_in_wavelengths)
    {
        return uniform(GridKind::Space, count, spacing_in_wavelengths);
    }

    ObservationGrid ObservationGrid::from_values(GridKind kind, std::vector<double> values)
    {
        if (values.size() < 2)
            throw std::invalid_argument("ObservationGrid::from_values needs at least two values");
        const double step = (values.back() - values.front()) / static_cast<double>(values.size() - 1);
        if (!(step > 0.0) || !std::isfinite(step))
            throw std::invalid_argument("ObservationGrid: values must be strictly increasing");
        for (std::size_t n = 1; n < values.size(); ++n)
        {
            const double d = values[n] - values[n - 1];
            if (std::abs(d - step) > 1e-12 * step)
                throw std::invalid_argument("ObservationGrid: values are not uniformly spaced");
        }
        return ObservationGrid(kind, std::move(values), step);
    }

    TargetDomain ObservationGrid::default_domain() const
    {
        const double period = 1.0 / spacing_;
        if (kind_ == GridKind::Frequency)
            return {0.0, period};
        return {-0.5 * period, 0.5 * period};
    }

    PathSet PathSet::scaled(cdouble factor) const
    {
        PathSet out = *this;
        for (auto &p : out.paths)
            p.gain *= factor;
        return out;
    }

    CVector atomic_signal(const ObservationGrid &grid, double u)
    {
        const std::size_t N = grid.size();
        CVector e(static_cast<Eigen::Index>(N));
        for (std::size_t n = 0; n < N; ++n)
            e[static_cast<Eigen::Index>(n)] = std::polar(1.0, -2.0 * pi * grid[n] * u);
        return e;
    }

    std::size_t total_size(std::span<const ObservationGrid> grids)
    {
        std::size_t total = 1;
        for (const auto &g : grids)
            total *= g.size();
        return total;
    }

    CVector kron_atomic_signal(std::span<const ObservationGrid> grids, std::span<const double> params)
    {
        if (grids.empty())
            throw DimensionMismatch("kron_atomic_signal: no grids");
        if (params.size() != grids.size())
            throw DimensionMismatch("kron_atomic_signal: expected " + std::to_string(grids.size()) +
                                    " parameters, got " + std::to_string(params.size()));

        CVector out = atomic_signal(grids[0], params[0]);
        for (std::size_t d = 1; d < grids.size(); ++d)
        {
            const CVector e = atomic_signal(grids[d], params[d]);
            CVector next(out.size() * e.size());
            for (Eigen::Index i = 0; i < out.size(); ++i)
                next.segment(i * e.size(), e.size()) = out[i] * e;
            out = std::move(next);
        }
        return out;
    }

    CVector synth_channel(std::span<const ObservationGrid> grids, const PathSet &paths)
    {
        CVector h = CVector::Zero(static_cast<Eigen::Index>(total_size(grids)));
        for (const auto &p : paths.paths)
        {
            if (p.params.size() != grids.size())
                throw DimensionMismatch("synth_channel: path has " + std::to_string(p.params.size()) +
                                        " parameters for " + std::to_string(grids.size()) + " grids");
            h += p.gain * kron_atomic_signal(grids, p.params);
        }
        return h;
    }

    Observation add_noise(const CVector &h, double target_snr_db, Rng &rng)
    {
        const double energy = h.squaredNorm();
        if (!(energy > 0.0))
            throw ZeroChannel("add_noise: channel has zero energy");

        Observation obs;
        obs.true_channel = h;
        if (std::isinf(target_snr_db) && target_snr_db > 0.0)
        {
            obs.y = h;
            obs.sigma2 = 0.0;
            return obs;
        }

        const double N = static_cast<double>(h.size());
        obs.sigma2 = energy / (N * std::pow(10.0, target_snr_db / 10.0));
        obs.y.resize(h.size());
        for (Eigen::Index i = 0; i < h.size(); ++i)
            obs.y[i] = h[i] + rng.complex_normal(obs.sigma2);
        return obs;
    }

    Observation add_noise(const CVector &h, double target_snr_db, std::uint64_t rng_seed)
    {
        Rng rng(rng_seed);
        Observation obs = add_noise(h, target_snr_db, rng);
        obs.seed = rng_seed;
        return obs;
    }

    double measure_snr(const CVector &h, double sigma2)
    {
        if (!(sigma2 > 0.0))
            throw ZeroNoise("measure_snr: noise variance must be positive");
        return h.squaredNorm() / (static_cast<double>(h.size()) * sigma2);
    }

    PathSet draw_paths(std::span<const TargetDomain> domains, std::size_t count, Rng &rng)
    {
        PathSet set;
        set.paths.reserve(count);
        for (std::size_t k = 0; k < count; ++k)
        {
            Path p;
            p.gain = rng.complex_normal(1.0);
            p.params.reserve(domains.size());
            for (const auto &dom : domains)
                p.params.push_back(rng.uniform(dom.u_min, dom.u_max));
            set.paths.push_back(std::move(p));
        }
        return set;
    }
}
