// SPDX-License-Identifier: Apache-2.0
//
// rssmap - indoor RSS map simulation and reflection-coefficient calibration
// Copyright (C) 2026 The rssmap authors
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

#include "rssmap/similarity.hpp"

#include <cstdlib>
#include <string>

namespace rssmap
{
    double pearson(const RealMap &a, const RealMap &b)
    {
        check_map(a);
        check_map(b);
        if (a.grid.n_u != b.grid.n_u || a.grid.n_v != b.grid.n_v)
            throw ValidationError("pearson: maps have different dimensions");
        return pearson(a.data, b.data);
    }

    void validate_search(const ShiftSearch &search, Eigen::Index n_u, Eigen::Index n_v)
    {
        if (search.max_shift_u < 0 || search.max_shift_v < 0)
            throw ValidationError("shift radius must be nonnegative");
        if (search.max_shift_u > n_u - 1)
            throw ValidationError("max_shift_u exceeds grid size minus one (" + std::to_string(n_u - 1) + ")");
        if (search.max_shift_v > n_v - 1)
            throw ValidationError("max_shift_v exceeds grid size minus one (" + std::to_string(n_v - 1) + ")");
        if (!(search.min_overlap_fraction > 0.0 && search.min_overlap_fraction <= 1.0))
            throw ValidationError("min_overlap_fraction must be in (0, 1]");
    }

    ShiftSearch clamp_search(ShiftSearch search, Eigen::Index n_u, Eigen::Index n_v)
    {
        search.max_shift_u = std::clamp<Eigen::Index>(search.max_shift_u, 0, std::max<Eigen::Index>(0, n_u - 1));
        search.max_shift_v = std::clamp<Eigen::Index>(search.max_shift_v, 0, std::max<Eigen::Index>(0, n_v - 1));
        return search;
    }

    CorrelationResult pearson_max_shift(const RealArray &a, const RealArray &b, const ShiftSearch &search)
    {
        const Eigen::Index n_u = a.rows(), n_v = a.cols();
        if (b.rows() != n_u || b.cols() != n_v)
            throw ValidationError("pearson_max_shift: maps have different dimensions");
        validate_search(search, n_u, n_v);

        const double total = double(n_u * n_v);
        bool admissible = false;
        bool found = false;
        CorrelationResult best;
        auto better = [](const CorrelationResult &c, const CorrelationResult &cur) {
            if (c.rho != cur.rho)
                return c.rho > cur.rho;
            const auto lc = std::abs(c.shift_u) + std::abs(c.shift_v);
            const auto lb = std::abs(cur.shift_u) + std::abs(cur.shift_v);
            if (lc != lb)
                return lc < lb;
            if (c.shift_u != cur.shift_u)
                return c.shift_u < cur.shift_u;
            return c.shift_v < cur.shift_v;
        };

        for (Eigen::Index du = -search.max_shift_u; du <= search.max_shift_u; ++du)
            for (Eigen::Index dv = -search.max_shift_v; dv <= search.max_shift_v; ++dv)
            {
                const Eigen::Index rows = n_u - std::abs(du);
                const Eigen::Index cols = n_v - std::abs(dv);
                if (double(rows * cols) < search.min_overlap_fraction * total)
                    continue;
                admissible = true;
                // a(i, j) pairs with b(i - du, j - dv).
                const Eigen::Index ai = std::max<Eigen::Index>(0, du), aj = std::max<Eigen::Index>(0, dv);
                const Eigen::Index bi = std::max<Eigen::Index>(0, -du), bj = std::max<Eigen::Index>(0, -dv);
                // The zero shift takes the contiguous path so it agrees bitwise
                // with plain pearson().
                const auto rho = (du == 0 && dv == 0)
                                     ? try_pearson(a, b)
                                     : try_pearson(a.block(ai, aj, rows, cols), b.block(bi, bj, rows, cols));
                if (!rho)
                    continue;
                const CorrelationResult cand{*rho, du, dv, rows * cols};
                if (!found || better(cand, best))
                {
                    best = cand;
                    found = true;
                }
            }

        if (!admissible)
            throw ValidationError("no shift satisfies the minimum overlap");
        if (!found)
            throw NumericalError("constant map: correlation undefined for every admissible shift");
        return best;
    }

    CorrelationResult pearson_max_shift(const RealMap &a, const RealMap &b, const ShiftSearch &search)
    {
        check_map(a);
        check_map(b);
        return pearson_max_shift(a.data, b.data, search);
    }
}
