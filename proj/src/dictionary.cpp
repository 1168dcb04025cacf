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

#include "hdsearch/dictionary.hpp"
#include "hdsearch/errors.hpp"

#include <cmath>

namespace hdsearch
{
    std::vector<double> bin_centers(const TargetDomain &domain, std::size_t count)
    {
        std::vector<double> centers(count);
        const double step = domain.width() / static_cast<double>(count);
        for (std::size_t i = 0; i < count; ++i)
            centers[i] = domain.u_min + (static_cast<double>(i) + 0.5) * step;
        return centers;
    }

    Dictionary build_classical(const ObservationGrid &grid, const TargetDomain &domain, std::size_t num_atoms)
    {
        if (num_atoms == 0)
            throw EmptyDictionary("build_classical: dictionary needs at least one atom");
        domain.validate();

        std::vector<double> params = bin_centers(domain, num_atoms);
        const auto N = static_cast<Eigen::Index>(grid.size());
        CMatrix atoms(N, static_cast<Eigen::Index>(num_atoms));
        const double scale = 1.0 / std::sqrt(static_cast<double>(N));
        for (std::size_t i = 0; i < num_atoms; ++i)
            atoms.col(static_cast<Eigen::Index>(i)) = atomic_signal(grid, params[i]) * scale;
        return Dictionary(grid, domain, std::move(atoms), std::move(params));
    }

    cdouble response(const CVector &atom, const ObservationGrid &grid, double u)
    {
        if (static_cast<std::size_t>(atom.size()) != grid.size())
            throw DimensionMismatch("response: atom length " + std::to_string(atom.size()) +
                                    " does not match grid size " + std::to_string(grid.size()));
        return atom.dot(atomic_signal(grid, u)); // Eigen's dot conjugates the first operand
    }

    std::vector<double> response_profile(const CVector &atom, const ObservationGrid &grid,
                                         std::span<const double> u_samples)
    {
        if (u_samples.empty())
            throw std::invalid_argument("response_profile: no samples");
        std::vector<double> out;
        out.reserve(u_samples.size());
        for (double u : u_samples)
            out.push_back(std::abs(response(atom, grid, u)));
        return out;
    }

    double sinc(double x)
    {
        if (x == 0.0)
            return 1.0;
        if (x == std::round(x))
            return 0.0;
        const double px = pi * x;
        return std::sin(px) / px;
    }

    CVector modulated_atom(const ObservationGrid &grid, double center, double width, SincAnchor anchor)
    {
        if (!(width > 0.0) || !std::isfinite(width))
            throw std::invalid_argument("meta_atom: width must be positive and finite");
        const double ref = anchor == SincAnchor::GridCenter ? grid.midpoint() : 0.0;
        CVector a(static_cast<Eigen::Index>(grid.size()));
        for (std::size_t n = 0; n < grid.size(); ++n)
            a[static_cast<Eigen::Index>(n)] =
                sinc(width * (grid[n] - ref)) * std::polar(1.0, -2.0 * pi * grid[n] * center);
        return a;
    }

    CVector meta_atom(const ObservationGrid &grid, double center, double width, SincAnchor anchor)
    {
        CVector a = modulated_atom(grid, center, width, anchor);
        const double norm = a.norm();
        if (!(norm > 0.0))
            throw ZeroVector("meta_atom: every sinc sample vanishes on this grid");
        return a / norm;
    }

    std::ptrdiff_t MetaAtomSet::bin_of(double u) const
    {
        for (std::size_t i = 0; i < centers.size(); ++i)
            if (u >= centers[i] - 0.5 * width && u < centers[i] + 0.5 * width)
                return static_cast<std::ptrdiff_t>(i);
        return -1;
    }

    MetaAtomSet build_meta_atoms(const ObservationGrid &grid, std::span<const double> centers, double width,
                                 SincAnchor anchor)
    {
        MetaAtomSet set;
        set.width = width;
        set.centers.assign(centers.begin(), centers.end());
        set.atoms.resize(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(centers.size()));
        for (std::size_t i = 0; i < centers.size(); ++i)
            set.atoms.col(static_cast<Eigen::Index>(i)) = meta_atom(grid, centers[i], width, anchor);
        return set;
    }
}
