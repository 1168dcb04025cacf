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

#ifndef HDSEARCH_RNG_HPP
#define HDSEARCH_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace hdsearch
{
    // Portable random stream: std::mt19937_64 (its output sequence is fixed by the standard) with
    // hand-written uniform and Box-Muller transforms, since the std:: distributions differ between
    // standard library implementations.
    //
    // Stream splitting: trial i of an experiment seeded with master_seed uses Rng(master_seed + i).
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        // Uniform on [0, 1) with 53 random bits
        double uniform()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

        // Standard normal (Box-Muller); the second variate of each pair is cached
        double normal();

        // Circularly-symmetric complex Gaussian with E|z|^2 = variance
        std::complex<double> complex_normal(double variance = 1.0);

        static std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial)
        {
            return master_seed + trial;
        }

    private:
        std::mt19937_64 engine_;
        double cached_ = 0.0;
        bool has_cached_ = false;
    };
}

#endif
