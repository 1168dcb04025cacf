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

#ifndef HDSEARCH_ERRORS_HPP
#define HDSEARCH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hdsearch
{
    // Argument errors (bad shapes, empty inputs, degenerate values) derive from std::invalid_argument,
    // failures that depend on the data or the environment derive from std::runtime_error.

    class DimensionMismatch : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ArityMismatch : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class LengthMismatch : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class EmptyDomain : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class EmptyDictionary : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ZeroChannel : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ZeroNoise : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ZeroTruth : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ZeroVector : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class NonFiniteResidual : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class RankDeficient : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Raised before any work is done when a configuration's predicted selection cost is above the ceiling.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        BudgetExceeded(const std::string &what, std::uint64_t predicted, std::uint64_t budget)
            : std::runtime_error(what), predicted_(predicted), budget_(budget) {}

        std::uint64_t predicted() const noexcept { return predicted_; }
        std::uint64_t budget() const noexcept { return budget_; }

    private:
        std::uint64_t predicted_;
        std::uint64_t budget_;
    };
}

#endif
