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

#ifndef HDSEARCH_RECOVERY_HPP
#define HDSEARCH_RECOVERY_HPP

#include "hdsearch/dictionary.hpp"
#include "hdsearch/hierarchical_search.hpp"
#include "hdsearch/opcount.hpp"
#include "hdsearch/signal_model.hpp"
#include "hdsearch/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace hdsearch
{
    struct StoppingRule
    {
        enum class Mode
        {
            FixedIterations,
            ResidualThreshold
        };

        Mode mode = Mode::FixedIterations;
        std::size_t iterations = 1;     // FixedIterations: number of greedy iterations
        double ratio = 0.0;             // ResidualThreshold: stop once |eps| <= ratio |y|
        std::size_t max_iterations = 0; // ResidualThreshold: hard cap, 0 = observation length

        static StoppingRule fixed(std::size_t s) { return {Mode::FixedIterations, s, 0.0, 0}; }
        static StoppingRule threshold(double ratio, std::size_t max_iterations = 0)
        {
            return {Mode::ResidualThreshold, 0, ratio, max_iterations};
        }

        // Throws std::invalid_argument unless s >= 1 or 0 < ratio < 1
        void validate() const;
    };

    struct SupportEntry
    {
        std::vector<double> params; // one per dimension
        CVector atom;               // unit norm, full observation length
    };

    struct RecoveryResult
    {
        std::vector<SupportEntry> support;
        CVector coefficients;              // x*
        CVector estimate;                  // h_hat = sum x*_i atom_i
        CVector residual;                  // y - h_hat
        std::vector<double> residual_norms; // |eps| after each iteration
        std::size_t iterations = 0;
        bool stopped_on_duplicate = false;
        OpCounter ops; // multiplications consumed by this call

        std::uint64_t selection_mults() const { return ops.selection_mults; }
        std::uint64_t total_mults() const { return ops.total_mults(); }
    };

    // Returns the atom to add given the current residual. Must count its own work in the counter.
    using AtomSelector = std::function<SupportEntry(const CVector &residual, OpCounter &counter)>;

    // x* = argmin |y - D x|. Column-pivoted Householder QR; throws RankDeficient when the smallest
    // pivot magnitude falls below 1e-10 times the largest, std::invalid_argument for s == 0 or a
    // row-count mismatch.
    CVector least_squares(const CMatrix &active_atoms, const CVector &y);

    // Index of argmax_i |<a_i, residual>| over the dictionary (ties: smallest index). Counts N A.
    std::size_t select_exhaustive(const Dictionary &dict, const CVector &residual, OpCounter &counter);

    // Greedy loop with least-squares refit (the OMP family). A selection that is already in the support
    // is not appended; the loop stops when that happens twice in a row. A selection that makes the
    // active set rank deficient is treated the same way.
    RecoveryResult greedy_least_squares(const CVector &y, const AtomSelector &select, const StoppingRule &stop,
                                        OpCounter &counter);

    // Exhaustive selection over the classical dictionary (N A multiplications per iteration)
    RecoveryResult omp(const CVector &y, const Dictionary &dict, const StoppingRule &stop, OpCounter &counter);

    // Matching pursuit: coefficient of the chosen atom is its correlation, eps <- eps - <a, eps> a
    RecoveryResult mp(const CVector &y, const Dictionary &dict, const StoppingRule &stop, OpCounter &counter);

    // OMP with hierarchical selection (n S N multiplications per iteration)
    RecoveryResult homp(const CVector &y, const ObservationGrid &grid, const TargetDomain &domain,
                        const HSearchConfig &cfg, const StoppingRule &stop, OpCounter &counter);

    // Classical OMP on the full Kronecker dictionary D_1 kron D_2 kron ... (N prod A_d per iteration).
    // Columns are generated block by block, never stored whole.
    RecoveryResult omp_kronecker(const CVector &y, std::span<const Dictionary> dicts, const StoppingRule &stop,
                                 OpCounter &counter);

    // Sequential per-dimension exhaustive selection. Dimension d contracts every atom of D_d against the
    // current tensor (A_d N_d ... N_D multiplications), keeps the atom with the largest l2 correlation and
    // passes its correlation vector on to dimension d+1.
    RecoveryResult momp(const CVector &y, std::span<const Dictionary> dicts, const StoppingRule &stop,
                        OpCounter &counter);

    // MOMP with per-dimension hierarchical search
    RecoveryResult mhomp(const CVector &y, std::span<const ObservationGrid> grids,
                         std::span<const TargetDomain> domains, std::span<const HSearchConfig> cfgs,
                         const StoppingRule &stop, OpCounter &counter);
}

#endif
