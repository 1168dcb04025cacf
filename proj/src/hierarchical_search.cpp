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

#include "hdsearch/hierarchical_search.hpp"
#include "hdsearch/errors.hpp"

#include <cmath>

namespace hdsearch
{
    std::uint64_t HSearchConfig::resolution() const
    {
        std::uint64_t r = 1;
        for (std::uint64_t s = 0; s < steps; ++s)
            r *= branching;
        return r;
    }

    void HSearchConfig::validate() const
    {
        if (branching < 2)
            throw std::invalid_argument("HSearchConfig: branching factor must be >= 2");
        if (steps < 1)
            throw std::invalid_argument("HSearchConfig: at least one step is required");
        // leaf indices are kept exact in double arithmetic
        const double leaves = std::pow(static_cast<double>(branching), static_cast<double>(steps));
        if (leaves > 9007199254740992.0)
            throw std::invalid_argument("HSearchConfig: n^S exceeds 2^53");
    }

    CMatrix contract_leading(const CVector &tensor, std::size_t trailing, const CMatrix &atoms)
    {
        const auto N = atoms.rows();
        const auto R = static_cast<Eigen::Index>(trailing);
        if (tensor.size() != N * R)
            throw DimensionMismatch("contract_leading: tensor of size " + std::to_string(tensor.size()) +
                                    " is not " + std::to_string(N) + " x " + std::to_string(R));
        // Row-major N x R is column-major R x N
        Eigen::Map<const CMatrix> E(tensor.data(), R, N);
        return E * atoms.conjugate();
    }

    std::size_t select_column(const CMatrix &correlations, Reduction reduction, TieBreak tie_break)
    {
        std::size_t best = 0;
        double best_score = -1.0;
        for (Eigen::Index j = 0; j < correlations.cols(); ++j)
        {
            const double score = reduction == Reduction::L2 ? correlations.col(j).squaredNorm()
                                                            : correlations.col(j).cwiseAbs().maxCoeff();
            const bool better = tie_break == TieBreak::SmallestIndex ? score > best_score : score >= best_score;
            if (better)
            {
                best = static_cast<std::size_t>(j);
                best_score = score;
            }
        }
        return best;
    }

    HSearchOutcome hsearch_tensor(const CVector &residual, std::size_t trailing, const TargetDomain &domain,
                                  const ObservationGrid &grid, const HSearchConfig &cfg, OpCounter &counter)
    {
        domain.validate();
        cfg.validate();
        const std::size_t N = grid.size();
        if (trailing == 0 || static_cast<std::size_t>(residual.size()) != N * trailing)
            throw DimensionMismatch("hsearch: residual of size " + std::to_string(residual.size()) +
                                    " does not match grid size " + std::to_string(N) + " x " +
                                    std::to_string(trailing));
        if (!residual.allFinite())
            throw NonFiniteResidual("hsearch: residual contains non-finite entries");

        const std::uint64_t n = cfg.branching;
        const double dn = static_cast<double>(n);
        const std::uint64_t before = counter.selection_mults;

        HSearchOutcome out;
        out.trace.reserve(cfg.steps);

        // prefix = index of the kept interval among the n^(t-1) bins of level t-1.
        // Children centers u_min + (prefix n + k + 1/2) L_t equal u* + (2k - 1 - n) L_t / 2 of the
        // textbook recursion, without accumulating rounding over the steps.
        std::uint64_t prefix = 0;
        double width = domain.width();
        std::vector<double> centers(n);
        for (std::uint64_t step = 0; step < cfg.steps; ++step)
        {
            const double parent_lo = domain.u_min + static_cast<double>(prefix) * width;
            width /= dn;
            for (std::uint64_t k = 0; k < n; ++k)
                centers[k] = domain.u_min + (static_cast<double>(prefix * n + k) + 0.5) * width;

            const MetaAtomSet metas = build_meta_atoms(grid, centers, width, cfg.anchor);
            counter.construction_mults += n * N;

            const CMatrix c = contract_leading(residual, trailing, metas.atoms);
            counter.add_correlations(n, N * trailing);

            const std::size_t j = select_column(c, cfg.reduction, cfg.tie_break);
            out.trace.push_back({parent_lo, parent_lo + dn * width, width, j, centers[j]});
            prefix = prefix * n + j;
            out.u_star = centers[j];
            out.payload = c.col(static_cast<Eigen::Index>(j));
        }

        out.leaf_index = prefix;
        out.mults = counter.selection_mults - before;
        return out;
    }

    HSearchOutcome hsearch_1d(const CVector &residual, const TargetDomain &domain, const ObservationGrid &grid,
                              const HSearchConfig &cfg, OpCounter &counter)
    {
        return hsearch_tensor(residual, 1, domain, grid, cfg, counter);
    }
}
