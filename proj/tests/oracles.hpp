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

// Reference computations for the tests. Written from the closed forms, with plain loops and no
// calls into the library beyond its value types.

#ifndef HDSEARCH_TESTS_ORACLES_HPP
#define HDSEARCH_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle
{
    using cd = std::complex<double>;
    using CVec = Eigen::VectorXcd;
    using CMat = Eigen::MatrixXcd;
    constexpr double pi = std::numbers::pi;

    // <e(u0)/sqrt(N), e(u)> on the grid gamma_n = g0 + n dg, n < N, written with d = u - u0:
    //   (1/sqrt N) exp(-j 2 pi g0 d) exp(-j pi (N-1) dg d) sin(pi N dg d) / sin(pi dg d)
    inline cd dirichlet(std::size_t N, double g0, double dg, double u0, double u)
    {
        const double d = u - u0;
        const double x = dg * d;
        const double Nd = static_cast<double>(N);
        const cd phase = std::polar(1.0, -2.0 * pi * g0 * d) * std::polar(1.0, -pi * (Nd - 1.0) * x);
        const double s = std::sin(pi * x);
        double ratio;
        if (std::abs(s) < 1e-13)
        {
            // x at an integer k: the sum is N, and the phase factor above is (-1)^((N-1)k)
            const double k = std::round(x);
            ratio = Nd * ((static_cast<long long>(std::llround((Nd - 1.0) * k)) % 2 == 0) ? 1.0 : -1.0);
        }
        else
            ratio = std::sin(pi * Nd * x) / s;
        return phase * ratio / std::sqrt(Nd);
    }

    inline CVec steering(std::size_t N, double g0, double dg, double u)
    {
        CVec e(static_cast<Eigen::Index>(N));
        for (std::size_t n = 0; n < N; ++n)
            e[static_cast<Eigen::Index>(n)] = std::polar(1.0, -2.0 * pi * (g0 + static_cast<double>(n) * dg) * u);
        return e;
    }

    inline CVec kron(const CVec &a, const CVec &b)
    {
        CVec out(a.size() * b.size());
        for (Eigen::Index i = 0; i < a.size(); ++i)
            for (Eigen::Index j = 0; j < b.size(); ++j)
                out[i * b.size() + j] = a[i] * b[j];
        return out;
    }

    inline CMat kron(const CMat &A, const CMat &B)
    {
        CMat out(A.rows() * B.rows(), A.cols() * B.cols());
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            for (Eigen::Index j = 0; j < A.cols(); ++j)
                out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        return out;
    }

    // argmax_j |D_j^H r|, first maximum wins
    inline std::size_t argmax_correlation(const CMat &D, const CVec &r)
    {
        std::size_t best = 0;
        double best_val = -1.0;
        for (Eigen::Index j = 0; j < D.cols(); ++j)
        {
            cd c = 0.0;
            for (Eigen::Index i = 0; i < D.rows(); ++i)
                c += std::conj(D(i, j)) * r[i];
            if (std::abs(c) > best_val)
            {
                best_val = std::abs(c);
                best = static_cast<std::size_t>(j);
            }
        }
        return best;
    }

    // Least squares through the normal equations (well-conditioned inputs only)
    inline CVec normal_equations(const CMat &D, const CVec &y)
    {
        const CMat G = D.adjoint() * D;
        return G.ldlt().solve(D.adjoint() * y);
    }

    // Contraction of a row-major N x R tensor with conj(a) along the leading index
    inline CVec contract(const CVec &tensor, std::size_t R, const CVec &a)
    {
        const auto N = a.size();
        CVec out = CVec::Zero(static_cast<Eigen::Index>(R));
        for (Eigen::Index n = 0; n < N; ++n)
            for (std::size_t r = 0; r < R; ++r)
                out[static_cast<Eigen::Index>(r)] += std::conj(a[n]) * tensor[n * static_cast<Eigen::Index>(R) + static_cast<Eigen::Index>(r)];
        return out;
    }

    // Circular distance on a period
    inline double circular(double a, double b, double period)
    {
        double d = std::fmod(std::abs(a - b), period);
        return std::min(d, period - d);
    }
}

#endif
