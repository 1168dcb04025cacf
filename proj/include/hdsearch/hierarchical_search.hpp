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

#ifndef HDSEARCH_HIERARCHICAL_SEARCH_HPP
#define HDSEARCH_HIERARCHICAL_SEARCH_HPP

#include "hdsearch/dictionary.hpp"
#include "hdsearch/opcount.hpp"
#include "hdsearch/signal_model.hpp"
#include "hdsearch/types.hpp"

#include <cstdint>
#include <vector>

namespace hdsearch
{
    enum class TieBreak
    {
        SmallestIndex,
        LargestIndex
    };

    // How a vector-valued correlation (tensor form) is reduced to a selection score
    enum class Reduction
    {
        L2,
        LInf
    };

    struct HSearchConfig
    {
        std::uint64_t branching = 2; // n
        std::uint64_t steps = 1;     // S
        TieBreak tie_break = TieBreak::SmallestIndex;
        Reduction reduction = Reduction::L2;
        SincAnchor anchor = SincAnchor::GridCenter;

        // Effective resolution n^S
        std::uint64_t resolution() const;

        // Throws std::invalid_argument unless n >= 2, S >= 1 and n^S <= 2^53
        void validate() const;
    };

    // One refinement step: the searched interval and the meta-atom kept
    struct HSearchStep
    {
        double lo = 0.0;
        double hi = 0.0;
        double width = 0.0; // meta-atom width L at this step
        std::uint64_t selected = 0;
        double center = 0.0;
    };

    struct HSearchOutcome
    {
        double u_star = 0.0;
        std::uint64_t leaf_index = 0; // index of u_star among the n^S final bins
        CVector payload;              // c[j*]: length 1 for the 1-D form, trailing size for the tensor form
        std::uint64_t mults = 0;      // selection multiplications consumed
        std::vector<HSearchStep> trace;

        cdouble correlation() const { return payload[0]; }
    };

    // Tree descent over the target domain. Step t correlates the residual with n unit-norm meta-atoms of
    // width L_t = width / n^t, centered on the n sub-bins of the interval kept at step t-1, and keeps the
    // one with the largest |c_j|. Costs n S N selection multiplications.
    //
    // Throws DimensionMismatch, EmptyDomain or NonFiniteResidual.
    HSearchOutcome hsearch_1d(const CVector &residual, const TargetDomain &domain, const ObservationGrid &grid,
                              const HSearchConfig &cfg, OpCounter &counter);

    // Tensor form: the residual is an N_d x R tensor flattened row-major (leading index slowest), and each
    // correlation contracts a conjugated meta-atom along the leading dimension, giving a length-R vector.
    // Selection uses cfg.reduction over that vector and the payload is the kept vector. Costs n S N_d R.
    HSearchOutcome hsearch_tensor(const CVector &residual, std::size_t trailing, const TargetDomain &domain,
                                  const ObservationGrid &grid, const HSearchConfig &cfg, OpCounter &counter);

    // Contract a flattened N x R tensor with the conjugate of each column of atoms (N x m): returns R x m.
    // Shared by the exhaustive per-dimension search.
    CMatrix contract_leading(const CVector &tensor, std::size_t trailing, const CMatrix &atoms);

    // Index of the best column of an R x m correlation matrix under the given reduction and tie rule
    std::size_t select_column(const CMatrix &correlations, Reduction reduction, TieBreak tie_break);
}

#endif
