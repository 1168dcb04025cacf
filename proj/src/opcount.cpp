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

#include "hdsearch/opcount.hpp"
#include "hdsearch/errors.hpp"

#include <stdexcept>

namespace hdsearch
{
    namespace
    {
        std::uint64_t mul(std::uint64_t a, std::uint64_t b)
        {
            std::uint64_t r;
            if (__builtin_mul_overflow(a, b, &r))
                throw std::overflow_error("multiplication count exceeds 64 bits");
            return r;
        }

        std::uint64_t add(std::uint64_t a, std::uint64_t b)
        {
            std::uint64_t r;
            if (__builtin_add_overflow(a, b, &r))
                throw std::overflow_error("multiplication count exceeds 64 bits");
            return r;
        }

        void check_arity(SelectionMethod method, std::size_t n_sizes, std::uint64_t branching)
        {
            const bool one_d = method == SelectionMethod::Classical1D || method == SelectionMethod::Hier1D;
            if (n_sizes == 0)
                throw ArityMismatch(to_string(method) + ": no sizes given");
            if (one_d && n_sizes != 1)
                throw ArityMismatch(to_string(method) + " takes exactly one size, got " + std::to_string(n_sizes));
            if (is_hierarchical(method) && branching < 2)
                throw ArityMismatch(to_string(method) + " needs a branching factor n >= 2");
        }
    }

    std::string to_string(SelectionMethod m)
    {
        switch (m)
        {
        case SelectionMethod::Classical1D:
            return "classical_1d";
        case SelectionMethod::Hier1D:
            return "hier_1d";
        case SelectionMethod::Classical3D:
            return "classical_3d";
        case SelectionMethod::MultiDimClassical:
            return "multidim_classical";
        case SelectionMethod::MultiDimHier:
            return "multidim_hier";
        }
        return "unknown";
    }

    SelectionMethod selection_method_from_string(const std::string &name)
    {
        for (auto m : {SelectionMethod::Classical1D, SelectionMethod::Hier1D, SelectionMethod::Classical3D,
                       SelectionMethod::MultiDimClassical, SelectionMethod::MultiDimHier})
            if (to_string(m) == name)
                return m;
        throw std::invalid_argument("unknown selection method '" + name + "'");
    }

    bool is_hierarchical(SelectionMethod m)
    {
        return m == SelectionMethod::Hier1D || m == SelectionMethod::MultiDimHier;
    }

    std::uint64_t predicted_selection_mults(SelectionMethod method, std::span<const std::uint64_t> dims,
                                            std::span<const std::uint64_t> sizes, std::uint64_t branching)
    {
        check_arity(method, sizes.size(), branching);
        if (dims.size() != sizes.size())
            throw ArityMismatch(to_string(method) + ": " + std::to_string(dims.size()) + " dims but " +
                                std::to_string(sizes.size()) + " sizes");

        switch (method)
        {
        case SelectionMethod::Classical1D:
            return mul(dims[0], sizes[0]);
        case SelectionMethod::Hier1D:
            return mul(dims[0], mul(branching, sizes[0]));
        case SelectionMethod::Classical3D:
        {
            std::uint64_t n_total = 1, a_total = 1;
            for (std::size_t d = 0; d < dims.size(); ++d)
            {
                n_total = mul(n_total, dims[d]);
                a_total = mul(a_total, sizes[d]);
            }
            return mul(n_total, a_total);
        }
        case SelectionMethod::MultiDimClassical:
        case SelectionMethod::MultiDimHier:
        {
            // trailing[d] = prod_{e >= d} N_e
            std::uint64_t total = 0, trailing = 1;
            for (std::size_t d = dims.size(); d-- > 0;)
            {
                trailing = mul(trailing, dims[d]);
                const std::uint64_t per_dim =
                    method == SelectionMethod::MultiDimHier ? mul(branching, sizes[d]) : sizes[d];
                total = add(total, mul(per_dim, trailing));
            }
            return total;
        }
        }
        throw std::invalid_argument("unknown selection method");
    }

    std::uint64_t predicted_correlations(SelectionMethod method, std::span<const std::uint64_t> sizes,
                                         std::uint64_t branching)
    {
        check_arity(method, sizes.size(), branching);
        switch (method)
        {
        case SelectionMethod::Classical1D:
            return sizes[0];
        case SelectionMethod::Hier1D:
            return mul(branching, sizes[0]);
        case SelectionMethod::Classical3D:
        {
            std::uint64_t total = 1;
            for (auto a : sizes)
                total = mul(total, a);
            return total;
        }
        case SelectionMethod::MultiDimClassical:
        {
            std::uint64_t total = 0;
            for (auto a : sizes)
                total = add(total, a);
            return total;
        }
        case SelectionMethod::MultiDimHier:
        {
            std::uint64_t total = 0;
            for (auto s : sizes)
                total = add(total, mul(branching, s));
            return total;
        }
        }
        throw std::invalid_argument("unknown selection method");
    }
}
