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

#ifndef HDSEARCH_DICTIONARY_HPP
#define HDSEARCH_DICTIONARY_HPP

#include "hdsearch/signal_model.hpp"
#include "hdsearch/types.hpp"

#include <span>
#include <vector>

namespace hdsearch
{
    // Classical dictionary: A unit-norm atomic signals e(u_i)/sqrt(N) with u_i at the bin centers
    // u_min + (i + 1/2) * width / A, i = 0 .. A-1.
    class Dictionary
    {
    public:
        Dictionary(ObservationGrid grid, TargetDomain domain, CMatrix atoms, std::vector<double> params)
            : grid_(std::move(grid)), domain_(domain), atoms_(std::move(atoms)), params_(std::move(params)) {}

        const ObservationGrid &grid() const { return grid_; }
        const TargetDomain &domain() const { return domain_; }
        const CMatrix &atoms() const { return atoms_; }
        const std::vector<double> &params() const { return params_; }
        std::size_t size() const { return params_.size(); }
        std::size_t length() const { return grid_.size(); }

    private:
        ObservationGrid grid_;
        TargetDomain domain_;
        CMatrix atoms_; // N x A
        std::vector<double> params_;
    };

    // Throws EmptyDictionary for A == 0, EmptyDomain for an invalid domain
    Dictionary build_classical(const ObservationGrid &grid, const TargetDomain &domain, std::size_t num_atoms);

    // Bin centers u_min + (i + 1/2) * width / count
    std::vector<double> bin_centers(const TargetDomain &domain, std::size_t count);

    // Correlation atom^H e(u). Throws DimensionMismatch if the lengths differ.
    cdouble response(const CVector &atom, const ObservationGrid &grid, double u);

    // |response| at every sample
    std::vector<double> response_profile(const CVector &atom, const ObservationGrid &grid,
                                         std::span<const double> u_samples);

    // Where the modulating sinc is centered on the observation axis.
    //   GridCenter: sinc(L (gamma_n - gamma_mid)), the window midpoint. The response magnitude is then a
    //               symmetric rectangle of width L around the center.
    //   Origin:     sinc(L gamma_n), literally anchored at gamma = 0. On a grid starting at 0 this samples
    //               only one side of the sinc and the rectangle acquires a quadrature component that peaks
    //               at its edges.
    enum class SincAnchor
    {
        GridCenter,
        Origin
    };

    // Normalized sinc, sin(pi x)/(pi x) with sinc(0) = 1
    double sinc(double x);

    // exp(-j 2 pi gamma_n c) * sinc(L (gamma_n - anchor)), not normalized
    CVector modulated_atom(const ObservationGrid &grid, double center, double width,
                           SincAnchor anchor = SincAnchor::GridCenter);

    // modulated_atom scaled to unit l2 norm. Throws std::invalid_argument for width <= 0
    // and ZeroVector if every sinc sample vanishes.
    CVector meta_atom(const ObservationGrid &grid, double center, double width,
                      SincAnchor anchor = SincAnchor::GridCenter);

    // n meta-atoms of common width L, centered L apart
    struct MetaAtomSet
    {
        CMatrix atoms; // N x n, unit-norm columns
        std::vector<double> centers;
        double width = 0.0;

        // Index i such that u lies in [c_i - L/2, c_i + L/2), or -1 if none
        std::ptrdiff_t bin_of(double u) const;
    };

    MetaAtomSet build_meta_atoms(const ObservationGrid &grid, std::span<const double> centers, double width,
                                 SincAnchor anchor = SincAnchor::GridCenter);
}

#endif
