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

#include "hdsearch/errors.hpp"
#include "hdsearch/opcount.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace hdsearch;
using V = std::vector<std::uint64_t>;

TEST_CASE("predicted selection multiplications")
{
    CHECK(predicted_selection_mults(SelectionMethod::Classical1D, V{256}, V{1024}) == 262144);
    CHECK(predicted_selection_mults(SelectionMethod::Hier1D, V{256}, V{10}, 2) == 5120);
    CHECK(predicted_selection_mults(SelectionMethod::Classical3D, V{4, 3, 2}, V{5, 6, 7}) == 24 * 210);
    // 5*24 + 6*6 + 7*2
    CHECK(predicted_selection_mults(SelectionMethod::MultiDimClassical, V{4, 3, 2}, V{5, 6, 7}) == 170);
    // 3*(2*24 + 1*6 + 4*2)
    CHECK(predicted_selection_mults(SelectionMethod::MultiDimHier, V{4, 3, 2}, V{2, 1, 4}, 3) == 186);
    // full scale: 524288 x 524288000
    CHECK(predicted_selection_mults(SelectionMethod::Classical3D, V{256, 64, 32}, V{2560, 640, 320}) ==
          524288ULL * 524288000ULL);
}

TEST_CASE("predicted correlations")
{
    CHECK(predicted_correlations(SelectionMethod::Classical1D, V{16}) == 16);
    CHECK(predicted_correlations(SelectionMethod::Hier1D, V{4}, 2) == 8);
    CHECK(predicted_correlations(SelectionMethod::Classical3D, V{5, 6, 7}) == 210);
    CHECK(predicted_correlations(SelectionMethod::MultiDimClassical, V{5, 6, 7}) == 18);
    CHECK(predicted_correlations(SelectionMethod::MultiDimHier, V{5, 6, 7}, 2) == 36);
}

TEST_CASE("arity and overflow errors")
{
    CHECK_THROWS_AS(predicted_selection_mults(SelectionMethod::Classical1D, V{4, 4}, V{4, 4}), ArityMismatch);
    CHECK_THROWS_AS(predicted_selection_mults(SelectionMethod::MultiDimClassical, V{4, 4}, V{4}), ArityMismatch);
    CHECK_THROWS_AS(predicted_selection_mults(SelectionMethod::Hier1D, V{4}, V{4}, 1), ArityMismatch);
    CHECK_THROWS_AS(predicted_selection_mults(SelectionMethod::MultiDimHier, V{}, V{}, 2), ArityMismatch);
    CHECK_THROWS_AS(predicted_correlations(SelectionMethod::Hier1D, V{4}), ArityMismatch);
    CHECK_THROWS_AS(predicted_selection_mults(SelectionMethod::Classical3D, V{1ULL << 40, 1ULL << 30}, V{2, 2}),
                    std::overflow_error);
}

TEST_CASE("method names round-trip")
{
    for (auto m : {SelectionMethod::Classical1D, SelectionMethod::Hier1D, SelectionMethod::Classical3D,
                   SelectionMethod::MultiDimClassical, SelectionMethod::MultiDimHier})
        CHECK(selection_method_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(selection_method_from_string("bogus"), std::invalid_argument);
    CHECK(is_hierarchical(SelectionMethod::MultiDimHier));
    CHECK_FALSE(is_hierarchical(SelectionMethod::Classical3D));
}

TEST_CASE("counter arithmetic")
{
    OpCounter a;
    a.add_correlations(3, 10);
    a.refit_mults = 7;
    a.construction_mults = 2;
    CHECK(a.selection_mults == 30);
    CHECK(a.correlations == 3);
    CHECK(a.total_mults() == 39);

    OpCounter b;
    b.add_correlations(1, 5);
    OpCounter sum = a;
    sum += b;
    CHECK(sum.selection_mults == 35);
    CHECK(sum - b == a);
}
