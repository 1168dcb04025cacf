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
#include "hdsearch/recovery.hpp"
#include "hdsearch/rng.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace hdsearch;
using Catch::Approx;

namespace
{
    CVector random_vector(Rng &rng, Eigen::Index n)
    {
        CVector v(n);
        for (auto &x : v)
            x = rng.complex_normal();
        return v;
    }

    // K distinct atom indices at least `gap` apart (circularly)
    std::vector<std::size_t> separated_indices(Rng &rng, std::size_t A, std::size_t K, std::size_t gap)
    {
        std::vector<std::size_t> out;
        while (out.size() < K)
        {
            const auto i = static_cast<std::size_t>(rng.uniform() * A);
            bool ok = true;
            for (auto j : out)
            {
                const std::size_t d = i > j ? i - j : j - i;
                if (std::min(d, A - d) < gap)
                    ok = false;
            }
            if (ok)
                out.push_back(i);
        }
        return out;
    }
}

TEST_CASE("least squares agrees with the normal equations")
{
    Rng rng(1);
    CMatrix D(20, 4);
    for (Eigen::Index j = 0; j < 4; ++j)
        D.col(j) = random_vector(rng, 20);
    const CVector y = random_vector(rng, 20);
    const CVector x = least_squares(D, y);
    CHECK((x - oracle::normal_equations(D, y)).norm() < 1e-10);
    // residual orthogonal to the columns
    CHECK((D.adjoint() * (y - D * x)).norm() < 1e-10 * y.norm());

    CMatrix dup(20, 2);
    dup.col(0) = D.col(0);
    dup.col(1) = cdouble(2.0, 1.0) * D.col(0);
    CHECK_THROWS_AS(least_squares(dup, y), RankDeficient);
    CHECK_THROWS_AS(least_squares(CMatrix(20, 0), y), std::invalid_argument);
    CHECK_THROWS_AS(least_squares(D, CVector(5)), DimensionMismatch);
}

TEST_CASE("exhaustive selection matches the brute-force argmax and counts N A")
{
    const auto grid = ObservationGrid::frequency(40, 1.0);
    const Dictionary D = build_classical(grid, grid.default_domain(), 100);
    Rng rng(4);
    for (int t = 0; t < 20; ++t)
    {
        const CVector r = random_vector(rng, 40);
        OpCounter c;
        CHECK(select_exhaustive(D, r, c) == oracle::argmax_correlation(D.atoms(), r));
        CHECK(c.selection_mults == 40 * 100);
        CHECK(c.correlations == 100);
    }
}

TEST_CASE("OMP recovers noiseless on-grid sparse signals")
{
    const std::size_t N = 64, A = 128, K = 4;
    const auto grid = ObservationGrid::frequency(N, 1.0);
    const Dictionary D = build_classical(grid, grid.default_domain(), A);
    Rng rng(9);
    for (int t = 0; t < 25; ++t)
    {
        const auto idx = separated_indices(rng, A, K, 6);
        CVector y = CVector::Zero(N);
        for (auto i : idx)
            y += rng.complex_normal() * D.atoms().col(static_cast<Eigen::Index>(i));
        OpCounter c;
        const RecoveryResult res = omp(y, D, StoppingRule::fixed(K), c);
        CHECK(res.residual.norm() <= 1e-9 * y.norm());
        CHECK((res.estimate - y).norm() <= 1e-9 * y.norm());
        std::set<double> found, truth;
        for (const auto &s : res.support)
            found.insert(s.params[0]);
        for (auto i : idx)
            truth.insert(D.params()[i]);
        CHECK(found == truth);
        CHECK(res.selection_mults() == K * N * A);
        CHECK(res.ops == c);
    }
}

TEST_CASE("OMP residual is orthogonal to the support and never grows")
{
    const auto grid = ObservationGrid::space(48);
    const Dictionary D = build_classical(grid, grid.default_domain(), 96);
    Rng rng(12);
    for (int t = 0; t < 20; ++t)
    {
        const CVector y = random_vector(rng, 48);
        OpCounter c;
        const RecoveryResult res = omp(y, D, StoppingRule::fixed(10), c);
        for (std::size_t k = 1; k < res.residual_norms.size(); ++k)
            CHECK(res.residual_norms[k] <= res.residual_norms[k - 1] * (1 + 1e-12));
        for (const auto &s : res.support)
            CHECK(std::abs(s.atom.dot(res.residual)) <= 1e-8 * y.norm());
    }
}

TEST_CASE("residual threshold stopping")
{
    const auto grid = ObservationGrid::frequency(32, 1.0);
    const Dictionary D = build_classical(grid, grid.default_domain(), 32);
    const CVector y = 2.0 * D.atoms().col(3) + cdouble(0.0, 1.0) * D.atoms().col(20);
    OpCounter c;
    const RecoveryResult res = omp(y, D, StoppingRule::threshold(1e-6), c);
    CHECK(res.iterations == 2);
    CHECK(res.residual.norm() <= 1e-6 * y.norm());

    CHECK_THROWS_AS(StoppingRule::fixed(0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(StoppingRule::threshold(0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(StoppingRule::threshold(1.0).validate(), std::invalid_argument);
}

TEST_CASE("repeated selection of a support atom ends the loop")
{
    const auto grid = ObservationGrid::frequency(16, 1.0);
    const Dictionary D = build_classical(grid, grid.default_domain(), 16);
    const CVector y = D.atoms().col(5);
    // a selector that always returns the same atom
    const AtomSelector stuck = [&](const CVector &, OpCounter &) {
        return SupportEntry{{D.params()[5]}, D.atoms().col(5)};
    };
    OpCounter c;
    const RecoveryResult res = greedy_least_squares(y, stuck, StoppingRule::fixed(10), c);
    CHECK(res.support.size() == 1);
    CHECK(res.iterations == 3);
    CHECK(res.stopped_on_duplicate);
}

TEST_CASE("matching pursuit")
{
    const auto grid = ObservationGrid::frequency(32, 1.0);
    const Dictionary D = build_classical(grid, grid.default_domain(), 32); // orthonormal
    const CVector y = cdouble(1.5, -0.5) * D.atoms().col(7) + 0.25 * D.atoms().col(19);
    OpCounter c;
    const RecoveryResult res = mp(y, D, StoppingRule::fixed(2), c);
    CHECK(res.residual.norm() < 1e-12);
    CHECK((res.estimate - y).norm() < 1e-12);
    CHECK(res.selection_mults() == 2 * 32 * 32);

    // on an overcomplete dictionary the residual still shrinks monotonically
    const Dictionary D2 = build_classical(grid, grid.default_domain(), 128);
    Rng rng(3);
    const CVector z = random_vector(rng, 32);
    const RecoveryResult r2 = mp(z, D2, StoppingRule::fixed(12), c);
    for (std::size_t k = 1; k < r2.residual_norms.size(); ++k)
        CHECK(r2.residual_norms[k] <= r2.residual_norms[k - 1] * (1 + 1e-12));
    CHECK((r2.estimate + r2.residual - z).norm() < 1e-10);
}

TEST_CASE("HOMP matches OMP on noiseless on-grid single paths")
{
    const std::size_t N = 64;
    const auto grid = ObservationGrid::frequency(N, 1.44e6);
    const TargetDomain dom = grid.default_domain();
    const Dictionary D = build_classical(grid, dom, 512);
    Rng rng(31);
    for (int t = 0; t < 30; ++t)
    {
        const auto i = static_cast<std::size_t>(rng.uniform() * 512);
        const CVector y = rng.complex_normal() * atomic_signal(grid, D.params()[i]);
        OpCounter ch, co;
        const RecoveryResult h = homp(y, grid, dom, {2, 9}, StoppingRule::fixed(1), ch);
        const RecoveryResult o = omp(y, D, StoppingRule::fixed(1), co);
        CHECK(h.support[0].params[0] == Approx(o.support[0].params[0]).epsilon(1e-12));
        CHECK(h.residual.norm() < 1e-9 * y.norm());
        CHECK(ch.selection_mults == 2 * 9 * N);
    }
}

TEST_CASE("Kronecker OMP selects the same atom as the explicit Kronecker dictionary")
{
    const std::vector<ObservationGrid> grids{ObservationGrid::frequency(6, 1.0), ObservationGrid::space(4),
                                             ObservationGrid::space(3)};
    std::vector<Dictionary> dicts;
    const std::vector<std::size_t> A{8, 5, 4};
    for (std::size_t d = 0; d < 3; ++d)
        dicts.push_back(build_classical(grids[d], grids[d].default_domain(), A[d]));
    const CMatrix full = oracle::kron(oracle::kron(dicts[0].atoms(), dicts[1].atoms()), dicts[2].atoms());

    Rng rng(6);
    for (int t = 0; t < 20; ++t)
    {
        const CVector y = random_vector(rng, 72);
        OpCounter c;
        const RecoveryResult res = omp_kronecker(y, dicts, StoppingRule::fixed(1), c);
        const std::size_t j = oracle::argmax_correlation(full, y);
        const std::size_t i1 = j / 20, i2 = (j / 4) % 5, i3 = j % 4;
        REQUIRE(res.support.size() == 1);
        CHECK(res.support[0].params == std::vector<double>{dicts[0].params()[i1], dicts[1].params()[i2],
                                                           dicts[2].params()[i3]});
        CHECK((res.support[0].atom - full.col(static_cast<Eigen::Index>(j))).norm() < 1e-12);
        CHECK(c.selection_mults == 72 * 160);
    }
}

TEST_CASE("MOMP and MHOMP recover noiseless on-grid single paths in 3-D")
{
    const std::vector<ObservationGrid> grids{ObservationGrid::frequency(16, 1.44e6), ObservationGrid::space(8),
                                             ObservationGrid::space(4)};
    std::vector<TargetDomain> doms;
    std::vector<Dictionary> dicts;
    std::vector<HSearchConfig> hcs;
    const std::vector<std::uint64_t> S{6, 5, 4};
    for (std::size_t d = 0; d < 3; ++d)
    {
        doms.push_back(grids[d].default_domain());
        dicts.push_back(build_classical(grids[d], doms[d], std::size_t{1} << S[d]));
        hcs.push_back({2, S[d]});
    }

    Rng rng(19);
    for (int t = 0; t < 20; ++t)
    {
        std::vector<double> params;
        for (std::size_t d = 0; d < 3; ++d)
            params.push_back(dicts[d].params()[static_cast<std::size_t>(rng.uniform() * dicts[d].size())]);
        const CVector y = rng.complex_normal() * kron_atomic_signal(grids, params);

        OpCounter cm, ch;
        const RecoveryResult m = momp(y, dicts, StoppingRule::fixed(1), cm);
        const RecoveryResult h = mhomp(y, grids, doms, hcs, StoppingRule::fixed(1), ch);
        for (std::size_t d = 0; d < 3; ++d)
        {
            CHECK(m.support[0].params[d] == Approx(params[d]).margin(1e-12));
            CHECK(h.support[0].params[d] == Approx(params[d]).margin(1e-12));
        }
        CHECK(m.residual.norm() < 1e-9 * y.norm());
        CHECK(h.residual.norm() < 1e-9 * y.norm());
        // sum_d A_d prod_{e>=d} N_e and sum_d n S_d prod_{e>=d} N_e
        CHECK(cm.selection_mults == 64u * 512 + 32u * 32 + 16u * 4);
        CHECK(ch.selection_mults == 2u * 6 * 512 + 2u * 5 * 32 + 2u * 4 * 4);
    }
}

TEST_CASE("recovery input validation")
{
    const auto grid = ObservationGrid::frequency(8, 1.0);
    const Dictionary D = build_classical(grid, grid.default_domain(), 8);
    OpCounter c;
    CHECK_THROWS_AS(omp(CVector::Zero(9), D, StoppingRule::fixed(1), c), DimensionMismatch);
    CHECK_THROWS_AS(omp(CVector(0), D, StoppingRule::fixed(1), c), std::invalid_argument);
    CHECK_THROWS_AS(momp(CVector::Zero(8), std::span<const Dictionary>{}, StoppingRule::fixed(1), c),
                    EmptyDictionary);
    const std::vector<ObservationGrid> grids{grid};
    const std::vector<TargetDomain> doms{grid.default_domain(), grid.default_domain()};
    const std::vector<HSearchConfig> hcs{{2, 3}};
    CHECK_THROWS_AS(mhomp(CVector::Zero(8), grids, doms, hcs, StoppingRule::fixed(1), c), DimensionMismatch);
}
