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

#ifndef HDSEARCH_OPCOUNT_HPP
#define HDSEARCH_OPCOUNT_HPP

#include <cstdint>
#include <span>
#include <string>

namespace hdsearch
{
    // Tally of complex multiplications. One complex multiplication is one unit, additions are free.
    //
    //   selection_mults    inner products of the atom selection step, each counted as its vector length
    //   refit_mults        least-squares refit and residual update
    //   construction_mults building meta-atoms / Kronecker atoms on the fly (one per generated entry)
    //   correlations       number of inner products in the selection step
    //
    // Counters are per task; merge with += (commutative and lossless).
    struct OpCounter
    {
        std::uint64_t selection_mults = 0;
        std::uint64_t refit_mults = 0;
        std::uint64_t construction_mults = 0;
        std::uint64_t correlations = 0;

        // count inner products of the given length
        void add_correlations(std::uint64_t count, std::uint64_t length)
        {
            correlations += count;
            selection_mults += count * length;
        }

        std::uint64_t total_mults() const { return selection_mults + refit_mults + construction_mults; }

        OpCounter &operator+=(const OpCounter &o)
        {
            selection_mults += o.selection_mults;
            refit_mults += o.refit_mults;
            construction_mults += o.construction_mults;
            correlations += o.correlations;
            return *this;
        }

        friend OpCounter operator-(OpCounter a, const OpCounter &b)
        {
            a.selection_mults -= b.selection_mults;
            a.refit_mults -= b.refit_mults;
            a.construction_mults -= b.construction_mults;
            a.correlations -= b.correlations;
            return a;
        }

        friend bool operator==(const OpCounter &, const OpCounter &) = default;
    };

    enum class SelectionMethod
    {
        Classical1D,
        Hier1D,
        Classical3D,       // exhaustive search over the full Kronecker dictionary
        MultiDimClassical, // sequential per-dimension exhaustive search (MOMP)
        MultiDimHier       // sequential per-dimension hierarchical search (MHOMP)
    };

    std::string to_string(SelectionMethod m);
    SelectionMethod selection_method_from_string(const std::string &name);
    bool is_hierarchical(SelectionMethod m);

    // Multiplications of one atom selection (one greedy iteration).
    //   dims   N_d in Kronecker order (one entry for the 1D methods)
    //   sizes  A_d for classical methods, S_d for hierarchical methods
    //   branching  n, required (>= 2) for hierarchical methods
    //
    //   Classical1D       N A
    //   Hier1D            N n S
    //   Classical3D       (prod N_d)(prod A_d)
    //   MultiDimClassical sum_d A_d prod_{e>=d} N_e
    //   MultiDimHier      sum_d n S_d prod_{e>=d} N_e
    //
    // Throws ArityMismatch for inconsistent argument counts, std::overflow_error past 2^64.
    std::uint64_t predicted_selection_mults(SelectionMethod method, std::span<const std::uint64_t> dims,
                                            std::span<const std::uint64_t> sizes, std::uint64_t branching = 0);

    // Inner products of one atom selection: A, n S, prod A_d, sum A_d, sum n S_d
    std::uint64_t predicted_correlations(SelectionMethod method, std::span<const std::uint64_t> sizes,
                                         std::uint64_t branching = 0);
}

#endif
