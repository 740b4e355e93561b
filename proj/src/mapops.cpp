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

#include "rssmap/mapops.hpp"
#include "rssmap/error.hpp"

#include <cmath>

namespace rssmap
{
    RealMap magnitude(const ComplexMap &m)
    {
        check_map(m);
        RealMap out;
        out.data = m.data.abs();
        out.grid = m.grid;
        out.frequency_hz = m.frequency_hz;
        out.unit = RealUnit::linear;
        out.provenance = m.provenance;
        return out;
    }

    RealMap normalize_max(const RealMap &m)
    {
        check_map(m);
        if (m.unit == RealUnit::db)
            throw ValidationError("normalize_max needs a linear magnitude map");
        const double peak = m.data.maxCoeff();
        if (!(peak > 0.0))
            throw NumericalError("degenerate map: zero maximum");
        RealMap out = m;
        out.data = m.data / peak;
        out.unit = RealUnit::normalized;
        return out;
    }

    RealMap freq_average(std::span<const ComplexMap> maps, AverageMode mode)
    {
        if (maps.empty())
            throw ValidationError("freq_average needs at least one map");
        const ComplexMap &first = maps.front();
        for (const ComplexMap &m : maps)
        {
            check_map(m);
            if (!same_grid(m.grid, first.grid))
                throw ValidationError("freq_average: maps are on different grids");
        }

        RealMap out;
        out.grid = first.grid;
        out.unit = RealUnit::linear;
        out.provenance = first.provenance;
        out.frequency_hz = maps.size() == 1 ? first.frequency_hz : 0.0;
        const double n = double(maps.size());
        if (mode == AverageMode::magnitude)
        {
            RealArray sum = RealArray::Zero(first.grid.n_u, first.grid.n_v);
            for (const ComplexMap &m : maps)
                sum += m.data.abs();
            out.data = sum / n;
        }
        else
        {
            ComplexArray sum = ComplexArray::Zero(first.grid.n_u, first.grid.n_v);
            for (const ComplexMap &m : maps)
                sum += m.data;
            out.data = (sum / n).abs();
        }
        return out;
    }

    AttenuationMap attenuation_map(const RealMap &fp, const RealMap &tar, double noise_floor)
    {
        check_map(fp);
        check_map(tar);
        if (fp.unit == RealUnit::db || tar.unit == RealUnit::db)
            throw ValidationError("attenuation_map needs linear magnitude inputs");
        if (!same_grid(fp.grid, tar.grid))
            throw ValidationError("attenuation_map: maps are on different grids");
        if (!(noise_floor >= 0.0))
            throw ValidationError("noise floor must be nonnegative");

        AttenuationMap out;
        out.map.grid = fp.grid;
        out.map.unit = RealUnit::db;
        out.map.provenance = fp.provenance;
        out.map.frequency_hz = fp.frequency_hz == tar.frequency_hz ? fp.frequency_hz : 0.0;
        out.map.data.resize(fp.grid.n_u, fp.grid.n_v);
        out.flags.setConstant(fp.grid.n_u, fp.grid.n_v, cell_ok);

        for (Eigen::Index j = 0; j < fp.grid.n_v; ++j)
            for (Eigen::Index i = 0; i < fp.grid.n_u; ++i)
            {
                const double a = fp.data(i, j);
                const double b = tar.data(i, j);
                double db;
                if (a < noise_floor && b < noise_floor)
                {
                    db = 0.0;
                    out.flags(i, j) = cell_below_floor;
                }
                else if (b == 0.0)
                {
                    db = attenuation_limit_db;
                    out.flags(i, j) = cell_clamped;
                }
                else if (a == 0.0)
                {
                    db = -attenuation_limit_db;
                    out.flags(i, j) = cell_clamped;
                }
                else
                {
                    db = 20.0 * std::log10(a / b);
                    if (!(std::abs(db) <= attenuation_limit_db))
                    {
                        db = std::copysign(attenuation_limit_db, db);
                        out.flags(i, j) = cell_clamped;
                    }
                }
                out.map.data(i, j) = db;
            }
        return out;
    }
}
