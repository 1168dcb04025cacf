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

#ifndef HDSEARCH_SIGNAL_MODEL_HPP
#define HDSEARCH_SIGNAL_MODEL_HPP

#include "hdsearch/rng.hpp"
#include "hdsearch/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdsearch
{
    enum class GridKind
    {
        Frequency, // subcarrier frequencies in Hz, paired with delays in seconds
        Space      // antenna positions in wavelengths, paired with cos(angle)
    };

    std::string to_string(GridKind kind);
    GridKind grid_kind_from_string(const std::string &name);

    // Admissible range [u_min, u_max] of one target parameter (delay or direction cosine)
    struct TargetDomain
    {
        double u_min = 0.0;
        double u_max = 1.0;

        double width() const { return u_max - u_min; }
        bool contains(double u) const { return u >= u_min && u <= u_max; }

        // Throws EmptyDomain unless u_max > u_min and both are finite
        void validate() const;
    };

    // Sensor positions gamma_n of one physical dimension in the observation domain.
    // Values are uniform: gamma_n = origin + n * spacing, n = 0 .. N-1.
    class ObservationGrid
    {
    public:
        // Uniform grid. Throws std::invalid_argument for count == 0 or spacing <= 0.
        static ObservationGrid uniform(GridKind kind, std::size_t count, double spacing, double origin = 0.0);

        // Pilot subcarriers at n * delta_f (baseband indexing)
        static ObservationGrid frequency(std::size_t count, double delta_f);

        // ULA with positions n * spacing_in_wavelengths (half-wavelength by default)
        static ObservationGrid space(std::size_t count, double spacing_in_wavelengths = 0.5);

        // Grid from explicit values. Needs at least two strictly increasing, uniformly spaced values
        // (relative deviation of each step from the mean step <= 1e-12).
        static ObservationGrid from_values(GridKind kind, std::vector<double> values);

        GridKind kind() const { return kind_; }
        std::size_t size() const { return values_.size(); }
        double spacing() const { return spacing_; }
        double origin() const { return values_.front(); }
        double midpoint() const { return 0.5 * (values_.front() + values_.back()); }
        const std::vector<double> &values() const { return values_; }
        double operator[](std::size_t n) const { return values_[n]; }

        // One period of the target domain: [0, 1/spacing] for frequency grids,
        // [-1/(2 spacing), 1/(2 spacing)] for spatial grids ([-1, 1] at half-wavelength spacing).
        TargetDomain default_domain() const;

    private:
        ObservationGrid(GridKind kind, std::vector<double> values, double spacing)
            : kind_(kind), values_(std::move(values)), spacing_(spacing) {}

        GridKind kind_;
        std::vector<double> values_;
        double spacing_;
    };

    struct Path
    {
        cdouble gain;
        std::vector<double> params; // one target parameter per dimension, in Kronecker order
    };

    struct PathSet
    {
        std::vector<Path> paths;

        std::size_t size() const { return paths.size(); }
        PathSet scaled(cdouble factor) const;
    };

    struct Observation
    {
        CVector y;
        double sigma2 = 0.0;
        std::optional<CVector> true_channel;
        std::uint64_t seed = 0;
    };

    // e(u) with entries exp(-j 2 pi gamma_n u)
    CVector atomic_signal(const ObservationGrid &grid, double u);

    // Kronecker product of the atomic signals of each dimension; the first grid varies slowest
    CVector kron_atomic_signal(std::span<const ObservationGrid> grids, std::span<const double> params);

    // sum_k alpha_k (e_1(u_k1) kron e_2(u_k2) kron ...). Throws DimensionMismatch on param arity.
    CVector synth_channel(std::span<const ObservationGrid> grids, const PathSet &paths);

    // Product of the grid sizes
    std::size_t total_size(std::span<const ObservationGrid> grids);

    // y = h + n with n ~ CN(0, sigma2 I) and sigma2 = |h|^2 / (N 10^(snr/10)).
    // An infinite target SNR returns y = h and sigma2 = 0. Throws ZeroChannel when |h| = 0.
    Observation add_noise(const CVector &h, double target_snr_db, std::uint64_t rng_seed);
    Observation add_noise(const CVector &h, double target_snr_db, Rng &rng);

    // |h|^2 / (N sigma2). Throws ZeroNoise when sigma2 == 0.
    double measure_snr(const CVector &h, double sigma2);

    // Random path set: gains CN(0,1), parameters uniform over each domain
    PathSet draw_paths(std::span<const TargetDomain> domains, std::size_t count, Rng &rng);
}

#endif
