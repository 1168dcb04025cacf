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
#include "hdsearch/experiments.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#ifndef HDSEARCH_VERSION
#define HDSEARCH_VERSION "0.0.0"
#endif

namespace hdsearch
{
    std::string library_version() { return HDSEARCH_VERSION; }

    double mae(std::span<const double> estimates, std::span<const double> truths, double period)
    {
        if (estimates.empty() || estimates.size() != truths.size())
            throw LengthMismatch("mae: need two non-empty sequences of equal length");
        double sum = 0.0;
        for (std::size_t i = 0; i < estimates.size(); ++i)
        {
            double d = std::abs(estimates[i] - truths[i]);
            if (period > 0.0)
            {
                d = std::fmod(d, period);
                d = std::min(d, period - d);
            }
            sum += d;
        }
        return sum / static_cast<double>(estimates.size());
    }

    double nmse(std::span<const CVector> estimates, std::span<const CVector> truths)
    {
        if (estimates.empty() || estimates.size() != truths.size())
            throw LengthMismatch("nmse: need two non-empty sequences of equal length");
        double sum = 0.0;
        for (std::size_t i = 0; i < estimates.size(); ++i)
        {
            if (estimates[i].size() != truths[i].size())
                throw LengthMismatch("nmse: estimate " + std::to_string(i) + " has the wrong length");
            const double energy = truths[i].squaredNorm();
            if (!(energy > 0.0))
                throw ZeroTruth("nmse: truth " + std::to_string(i) + " has zero energy");
            sum += (estimates[i] - truths[i]).squaredNorm() / energy;
        }
        return sum / static_cast<double>(estimates.size());
    }

    std::string format_double(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }

    void write_csv(std::ostream &out, std::span<const MetricRow> rows)
    {
        out << csv_header << '\n';
        for (const auto &r : rows)
        {
            out << r.method << ',' << r.scenario << ',';
            if (r.branching)
                out << *r.branching;
            out << ',' << r.resolution << ',' << format_double(r.sel_mults) << ',' << format_double(r.total_mults)
                << ',' << format_double(r.metric) << ',' << r.trials << ',' << r.seed << '\n';
        }
        if (!out)
            throw IoError("write_csv: write failed");
    }

    void write_csv(const std::string &path, std::span<const MetricRow> rows)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("write_csv: cannot open '" + path + "' for writing");
        write_csv(out, rows);
    }

    void write_profile_csv(std::ostream &out, std::span<const double> u, std::span<const double> magnitude)
    {
        if (u.size() != magnitude.size())
            throw LengthMismatch("write_profile_csv: column lengths differ");
        out << "u,magnitude\n";
        for (std::size_t i = 0; i < u.size(); ++i)
            out << format_double(u[i]) << ',' << format_double(magnitude[i]) << '\n';
        if (!out)
            throw IoError("write_profile_csv: write failed");
    }
}
