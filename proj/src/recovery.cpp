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

#include "hdsearch/recovery.hpp"
#include "hdsearch/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hdsearch
{
    namespace
    {
        CVector kron(const std::vector<CVector> &factors)
        {
            CVector out = CVector::Ones(1);
            for (const auto &f : factors)
            {
                CVector next(out.size() * f.size());
                for (Eigen::Index i = 0; i < out.size(); ++i)
                    next.segment(i * f.size(), f.size()) = out[i] * f;
                out = std::move(next);
            }
            return out;
        }

        std::size_t iteration_cap(const StoppingRule &stop, std::size_t N)
        {
            if (stop.mode == StoppingRule::Mode::FixedIterations)
                return stop.iterations;
            return stop.max_iterations > 0 ? stop.max_iterations : N;
        }

        bool should_stop(const StoppingRule &stop, double residual_norm, double y_norm)
        {
            return stop.mode == StoppingRule::Mode::ResidualThreshold && residual_norm <= stop.ratio * y_norm;
        }

        void check_observation(const CVector &y, std::size_t expected)
        {
            if (y.size() == 0)
                throw std::invalid_argument("recovery: empty observation");
            if (static_cast<std::size_t>(y.size()) != expected)
                throw DimensionMismatch("recovery: observation length " + std::to_string(y.size()) +
                                        " does not match dictionary length " + std::to_string(expected));
        }

        std::size_t argmax_abs(const CVector &c)
        {
            std::size_t best = 0;
            double best_val = -1.0;
            for (Eigen::Index i = 0; i < c.size(); ++i)
            {
                const double v = std::norm(c[i]);
                if (v > best_val)
                {
                    best_val = v;
                    best = static_cast<std::size_t>(i);
                }
            }
            return best;
        }

        AtomSelector exhaustive_selector(const Dictionary &dict)
        {
            return [&dict](const CVector &residual, OpCounter &counter)
            {
                const std::size_t i = select_exhaustive(dict, residual, counter);
                return SupportEntry{{dict.params()[i]}, dict.atoms().col(static_cast<Eigen::Index>(i))};
            };
        }

        std::size_t total_length(std::span<const Dictionary> dicts)
        {
            std::size_t n = 1;
            for (const auto &d : dicts)
                n *= d.length();
            return n;
        }
    }

    std::size_t select_exhaustive(const Dictionary &dict, const CVector &residual, OpCounter &counter)
    {
        if (dict.size() == 0)
            throw EmptyDictionary("select_exhaustive: empty dictionary");
        if (static_cast<std::size_t>(residual.size()) != dict.length())
            throw DimensionMismatch("select_exhaustive: residual length does not match the dictionary");
        const CVector corr = dict.atoms().adjoint() * residual;
        counter.add_correlations(dict.size(), dict.length());
        return argmax_abs(corr);
    }

    void StoppingRule::validate() const
    {
        if (mode == Mode::FixedIterations && iterations < 1)
            throw std::invalid_argument("StoppingRule: fixed iteration count must be >= 1");
        if (mode == Mode::ResidualThreshold && !(ratio > 0.0 && ratio < 1.0))
            throw std::invalid_argument("StoppingRule: residual ratio must lie in (0, 1)");
    }

    CVector least_squares(const CMatrix &active_atoms, const CVector &y)
    {
        if (active_atoms.cols() == 0)
            throw std::invalid_argument("least_squares: no active atoms");
        if (active_atoms.rows() != y.size())
            throw DimensionMismatch("least_squares: row count does not match observation length");

        const Eigen::ColPivHouseholderQR<CMatrix> qr(active_atoms);
        const auto diag = qr.matrixQR().diagonal().cwiseAbs();
        const double largest = diag.maxCoeff();
        if (!(largest > 0.0) || diag.minCoeff() < 1e-10 * largest)
            throw RankDeficient("least_squares: active atoms are (numerically) linearly dependent");
        return qr.solve(y);
    }

    RecoveryResult greedy_least_squares(const CVector &y, const AtomSelector &select, const StoppingRule &stop,
                                        OpCounter &counter)
    {
        stop.validate();
        if (y.size() == 0)
            throw std::invalid_argument("recovery: empty observation");

        const OpCounter start = counter;
        const auto N = y.size();
        const std::uint64_t uN = static_cast<std::uint64_t>(N);
        const double y_norm = y.norm();
        const std::size_t cap = iteration_cap(stop, static_cast<std::size_t>(N));

        RecoveryResult res;
        res.residual = y;
        res.estimate = CVector::Zero(N);
        CMatrix active(N, 0);
        std::size_t duplicate_run = 0;

        while (res.iterations < cap && !should_stop(stop, res.residual.norm(), y_norm))
        {
            SupportEntry entry = select(res.residual, counter);
            ++res.iterations;

            bool duplicate = std::any_of(res.support.begin(), res.support.end(),
                                         [&](const SupportEntry &e) { return e.params == entry.params; });
            if (!duplicate)
            {
                const auto s = active.cols();
                active.conservativeResize(N, s + 1);
                active.col(s) = entry.atom;
                try
                {
                    res.coefficients = least_squares(active, y);
                }
                catch (const RankDeficient &)
                {
                    active.conservativeResize(N, s);
                    duplicate = true;
                }
                if (!duplicate)
                {
                    const std::uint64_t us = static_cast<std::uint64_t>(s + 1);
                    res.support.push_back(std::move(entry));
                    res.estimate = active * res.coefficients;
                    res.residual = y - res.estimate;
                    // QR factorization ~ N s^2, Q^H y ~ N s, reconstruction N s
                    counter.refit_mults += uN * us * us + 2 * uN * us;
                }
            }

            res.residual_norms.push_back(res.residual.norm());
            if (duplicate)
            {
                if (++duplicate_run >= 2)
                {
                    res.stopped_on_duplicate = true;
                    break;
                }
            }
            else
                duplicate_run = 0;
        }

        res.ops = counter - start;
        return res;
    }

    RecoveryResult omp(const CVector &y, const Dictionary &dict, const StoppingRule &stop, OpCounter &counter)
    {
        if (dict.size() == 0)
            throw EmptyDictionary("omp: empty dictionary");
        check_observation(y, dict.length());
        return greedy_least_squares(y, exhaustive_selector(dict), stop, counter);
    }

    RecoveryResult mp(const CVector &y, const Dictionary &dict, const StoppingRule &stop, OpCounter &counter)
    {
        stop.validate();
        if (dict.size() == 0)
            throw EmptyDictionary("mp: empty dictionary");
        check_observation(y, dict.length());

        const OpCounter start = counter;
        const auto N = y.size();
        const double y_norm = y.norm();
        const std::size_t cap = iteration_cap(stop, static_cast<std::size_t>(N));
        const AtomSelector select = exhaustive_selector(dict);

        RecoveryResult res;
        res.residual = y;
        std::vector<cdouble> coeffs;
        while (res.iterations < cap && !should_stop(stop, res.residual.norm(), y_norm))
        {
            SupportEntry entry = select(res.residual, counter);
            ++res.iterations;
            const cdouble c = entry.atom.dot(res.residual);
            res.residual -= c * entry.atom;
            counter.refit_mults += 2 * static_cast<std::uint64_t>(N);

            auto it = std::find_if(res.support.begin(), res.support.end(),
                                   [&](const SupportEntry &e) { return e.params == entry.params; });
            if (it != res.support.end())
                coeffs[static_cast<std::size_t>(it - res.support.begin())] += c;
            else
            {
                res.support.push_back(std::move(entry));
                coeffs.push_back(c);
            }
            res.residual_norms.push_back(res.residual.norm());
        }

        res.coefficients = Eigen::Map<const CVector>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
        res.estimate = CVector::Zero(N);
        for (std::size_t i = 0; i < res.support.size(); ++i)
            res.estimate += coeffs[i] * res.support[i].atom;
        res.ops = counter - start;
        return res;
    }

    RecoveryResult homp(const CVector &y, const ObservationGrid &grid, const TargetDomain &domain,
                        const HSearchConfig &cfg, const StoppingRule &stop, OpCounter &counter)
    {
        check_observation(y, grid.size());
        domain.validate();
        cfg.validate();
        const double scale = 1.0 / std::sqrt(static_cast<double>(grid.size()));
        const AtomSelector select = [&](const CVector &residual, OpCounter &c)
        {
            const HSearchOutcome out = hsearch_1d(residual, domain, grid, cfg, c);
            return SupportEntry{{out.u_star}, atomic_signal(grid, out.u_star) * scale};
        };
        return greedy_least_squares(y, select, stop, counter);
    }

    RecoveryResult omp_kronecker(const CVector &y, std::span<const Dictionary> dicts, const StoppingRule &stop,
                                 OpCounter &counter)
    {
        if (dicts.empty())
            throw EmptyDictionary("omp_kronecker: no dictionaries");
        for (const auto &d : dicts)
            if (d.size() == 0)
                throw EmptyDictionary("omp_kronecker: empty per-dimension dictionary");
        check_observation(y, total_length(dicts));

        const AtomSelector select = [dicts](const CVector &residual, OpCounter &c)
        {
            const std::size_t D = dicts.size();
            const Dictionary &last = dicts[D - 1];
            const auto N_last = static_cast<Eigen::Index>(last.length());
            const auto A_last = static_cast<Eigen::Index>(last.size());
            const auto N = residual.size();

            std::size_t n_prefix = 1; // combinations of the leading D-1 dimensions
            for (std::size_t d = 0; d + 1 < D; ++d)
                n_prefix *= dicts[d].size();

            std::vector<std::size_t> idx(D - 1, 0);
            std::vector<std::size_t> best_idx;
            Eigen::Index best_last = 0;
            double best_score = -1.0;
            CMatrix block(N, A_last);
            for (std::size_t p = 0; p < n_prefix; ++p)
            {
                // p is the row-major linear index of (i_1, ..., i_{D-1})
                std::size_t rest = p;
                for (std::size_t d = D - 1; d-- > 0;)
                {
                    idx[d] = rest % dicts[d].size();
                    rest /= dicts[d].size();
                }
                std::vector<CVector> cols;
                for (std::size_t d = 0; d + 1 < D; ++d)
                    cols.push_back(dicts[d].atoms().col(static_cast<Eigen::Index>(idx[d])));
                const CVector prefix = kron(cols);
                for (Eigen::Index i = 0; i < prefix.size(); ++i)
                    block.middleRows(i * N_last, N_last) = prefix[i] * last.atoms();
                c.construction_mults += static_cast<std::uint64_t>(N) * static_cast<std::uint64_t>(A_last);

                const CVector corr = block.adjoint() * residual;
                c.add_correlations(static_cast<std::uint64_t>(A_last), static_cast<std::uint64_t>(N));
                for (Eigen::Index j = 0; j < A_last; ++j)
                {
                    const double v = std::norm(corr[j]);
                    if (v > best_score)
                    {
                        best_score = v;
                        best_idx = idx;
                        best_last = j;
                    }
                }
            }

            SupportEntry e;
            std::vector<CVector> cols;
            for (std::size_t d = 0; d + 1 < D; ++d)
            {
                e.params.push_back(dicts[d].params()[best_idx[d]]);
                cols.push_back(dicts[d].atoms().col(static_cast<Eigen::Index>(best_idx[d])));
            }
            e.params.push_back(last.params()[static_cast<std::size_t>(best_last)]);
            cols.push_back(last.atoms().col(best_last));
            e.atom = kron(cols);
            return e;
        };
        return greedy_least_squares(y, select, stop, counter);
    }

    RecoveryResult momp(const CVector &y, std::span<const Dictionary> dicts, const StoppingRule &stop,
                        OpCounter &counter)
    {
        if (dicts.empty())
            throw EmptyDictionary("momp: no dictionaries");
        for (const auto &d : dicts)
            if (d.size() == 0)
                throw EmptyDictionary("momp: empty per-dimension dictionary");
        check_observation(y, total_length(dicts));

        const AtomSelector select = [dicts](const CVector &residual, OpCounter &c)
        {
            SupportEntry e;
            std::vector<CVector> cols;
            CVector current = residual;
            for (std::size_t d = 0; d < dicts.size(); ++d)
            {
                const Dictionary &dict = dicts[d];
                const std::size_t trailing = static_cast<std::size_t>(current.size()) / dict.length();
                const CMatrix corr = contract_leading(current, trailing, dict.atoms());
                c.add_correlations(dict.size(), static_cast<std::uint64_t>(current.size()));
                const std::size_t j = select_column(corr, Reduction::L2, TieBreak::SmallestIndex);
                current = corr.col(static_cast<Eigen::Index>(j));
                e.params.push_back(dict.params()[j]);
                cols.push_back(dict.atoms().col(static_cast<Eigen::Index>(j)));
            }
            e.atom = kron(cols);
            return e;
        };
        return greedy_least_squares(y, select, stop, counter);
    }

    RecoveryResult mhomp(const CVector &y, std::span<const ObservationGrid> grids,
                         std::span<const TargetDomain> domains, std::span<const HSearchConfig> cfgs,
                         const StoppingRule &stop, OpCounter &counter)
    {
        if (grids.empty())
            throw EmptyDictionary("mhomp: no dimensions");
        if (domains.size() != grids.size() || cfgs.size() != grids.size())
            throw DimensionMismatch("mhomp: need one domain and one search configuration per grid");
        for (std::size_t d = 0; d < grids.size(); ++d)
        {
            domains[d].validate();
            cfgs[d].validate();
        }
        check_observation(y, total_size(grids));

        const AtomSelector select = [grids, domains, cfgs](const CVector &residual, OpCounter &c)
        {
            SupportEntry e;
            std::vector<CVector> cols;
            CVector current = residual;
            for (std::size_t d = 0; d < grids.size(); ++d)
            {
                const ObservationGrid &grid = grids[d];
                const std::size_t trailing = static_cast<std::size_t>(current.size()) / grid.size();
                HSearchOutcome out = hsearch_tensor(current, trailing, domains[d], grid, cfgs[d], c);
                current = std::move(out.payload);
                e.params.push_back(out.u_star);
                cols.push_back(atomic_signal(grid, out.u_star) / std::sqrt(static_cast<double>(grid.size())));
            }
            e.atom = kron(cols);
            return e;
        };
        return greedy_least_squares(y, select, stop, counter);
    }
}
