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

#include "rssmap/maps.hpp"
#include "rssmap/error.hpp"

#include <cmath>
#include <string>

namespace rssmap
{
    namespace
    {
        bool close_rel(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }

        void check_shape(Eigen::Index rows, Eigen::Index cols, const GridShape &g)
        {
            if (g.n_u < 1 || g.n_v < 1)
                throw ValidationError("map grid must have at least one cell");
            if (rows != g.n_u || cols != g.n_v)
                throw ValidationError("map data is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                      " but grid is " + std::to_string(g.n_u) + "x" + std::to_string(g.n_v));
        }
    }

    bool same_grid(const GridShape &a, const GridShape &b)
    {
        return a.n_u == b.n_u && a.n_v == b.n_v && close_rel(a.step_u, b.step_u) && close_rel(a.step_v, b.step_v);
    }

    std::string_view to_string(Provenance p)
    {
        switch (p)
        {
        case Provenance::simulated:
            return "simulated";
        case Provenance::measured:
            return "measured";
        case Provenance::synthetic:
            return "synthetic";
        }
        return "simulated";
    }

    std::string_view to_string(ComplexUnit u)
    {
        return u == ComplexUnit::volt_per_meter ? "volt_per_meter" : "dimensionless";
    }

    std::string_view to_string(RealUnit u)
    {
        switch (u)
        {
        case RealUnit::linear:
            return "linear";
        case RealUnit::db:
            return "db";
        case RealUnit::normalized:
            return "normalized";
        }
        return "linear";
    }

    Provenance provenance_from_string(std::string_view s)
    {
        if (s == "simulated")
            return Provenance::simulated;
        if (s == "measured")
            return Provenance::measured;
        if (s == "synthetic")
            return Provenance::synthetic;
        throw ValidationError("unknown provenance '" + std::string(s) + "'");
    }

    ComplexUnit complex_unit_from_string(std::string_view s)
    {
        if (s == "volt_per_meter")
            return ComplexUnit::volt_per_meter;
        if (s == "dimensionless")
            return ComplexUnit::dimensionless;
        throw ValidationError("unknown complex map unit '" + std::string(s) + "'");
    }

    RealUnit real_unit_from_string(std::string_view s)
    {
        if (s == "linear")
            return RealUnit::linear;
        if (s == "db")
            return RealUnit::db;
        if (s == "normalized")
            return RealUnit::normalized;
        throw ValidationError("unknown real map unit '" + std::string(s) + "'");
    }

    void check_map(const ComplexMap &m)
    {
        check_shape(m.data.rows(), m.data.cols(), m.grid);
        if (!m.data.allFinite())
            throw ValidationError("complex map has non-finite entries");
    }

    void check_map(const RealMap &m)
    {
        check_shape(m.data.rows(), m.data.cols(), m.grid);
        if (!m.data.allFinite())
            throw ValidationError("real map has non-finite entries");
        if (m.unit != RealUnit::db && (m.data < 0.0).any())
            throw ValidationError("magnitude map has negative entries");
    }
}
