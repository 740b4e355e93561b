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

#ifndef rssmap_similarity_H
#define rssmap_similarity_H

#include "rssmap/error.hpp"
#include "rssmap/maps.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace rssmap
{
    // Pearson correlation of two equally sized arrays (any Eigen expression).
    // Returns nullopt when either side has zero variance.
    template <typename DerivedA, typename DerivedB>
    std::optional<double> try_pearson(const Eigen::ArrayBase<DerivedA> &a, const Eigen::ArrayBase<DerivedB> &b)
    {
        const auto n = a.size();
        if (n == 0 || b.rows() != a.rows() || b.cols() != a.cols())
            return std::nullopt;
        const double mean_a = a.mean();
        const double mean_b = b.mean();
        const auto da = (a - mean_a);
        const auto db = (b - mean_b);
        const double saa = da.square().sum();
        const double sbb = db.square().sum();
        if (!(saa > 0.0) || !(sbb > 0.0))
            return std::nullopt;
        const double sab = (da * db).sum();
        return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
    }

    template <typename DerivedA, typename DerivedB>
    double pearson(const Eigen::ArrayBase<DerivedA> &a, const Eigen::ArrayBase<DerivedB> &b)
    {
        if (b.rows() != a.rows() || b.cols() != a.cols())
            throw ValidationError("pearson: dimension mismatch");
        if (auto rho = try_pearson(a, b))
            return *rho;
        throw NumericalError("constant map: correlation undefined");
    }

    double pearson(const RealMap &a, const RealMap &b);

    struct ShiftSearch
    {
        Eigen::Index max_shift_u = 5;
        Eigen::Index max_shift_v = 5;
        double min_overlap_fraction = 0.5;
    };

    struct CorrelationResult
    {
        double rho = 0.0;
        Eigen::Index shift_u = 0;
        Eigen::Index shift_v = 0;
        Eigen::Index overlap_cells = 0;
    };

    // Throws ValidationError unless radii are within the map size minus one and
    // the overlap fraction is in (0, 1].
    void validate_search(const ShiftSearch &search, Eigen::Index n_u, Eigen::Index n_v);

    // Maximum Pearson correlation over integer shifts. A shift (du, dv) pairs
    // a(i, j) with b(i - du, j - dv), i.e. b moved by +du/+dv; only the overlap
    // region enters each coefficient. Ties go to the smallest |du|+|dv|, then
    // the smallest du, then the smallest dv.
    CorrelationResult pearson_max_shift(const RealArray &a, const RealArray &b, const ShiftSearch &search);
    CorrelationResult pearson_max_shift(const RealMap &a, const RealMap &b, const ShiftSearch &search);

    // Search radii clipped to what the grid admits.
    ShiftSearch clamp_search(ShiftSearch search, Eigen::Index n_u, Eigen::Index n_v);
}

#endif
