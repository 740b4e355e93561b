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

#ifndef rssmap_maps_H
#define rssmap_maps_H

#include "rssmap/scene.hpp"
#include "rssmap/types.hpp"

#include <string_view>

namespace rssmap
{
    // Grid metadata carried by every map. Geometry beyond counts and steps
    // lives in the scene, not in map files.
    struct GridShape
    {
        Eigen::Index n_u = 0;
        Eigen::Index n_v = 0;
        double step_u = 0.0;
        double step_v = 0.0;

        Eigen::Index size() const { return n_u * n_v; }
        static GridShape of(const RxGrid &grid) { return {grid.n_u, grid.n_v, grid.step_u, grid.step_v}; }
    };

    // Same counts, steps equal to 1e-9 relative.
    bool same_grid(const GridShape &a, const GridShape &b);

    enum class Provenance
    {
        simulated,
        measured,
        synthetic
    };

    enum class ComplexUnit
    {
        volt_per_meter,
        dimensionless
    };

    enum class RealUnit
    {
        linear,    // linear magnitude, entries >= 0
        db,        // decibel
        normalized // linear magnitude divided by its maximum
    };

    std::string_view to_string(Provenance p);
    std::string_view to_string(ComplexUnit u);
    std::string_view to_string(RealUnit u);
    Provenance provenance_from_string(std::string_view s);
    ComplexUnit complex_unit_from_string(std::string_view s);
    RealUnit real_unit_from_string(std::string_view s);

    // Complex samples on the receiver grid (E_z or S21). data is n_u x n_v.
    struct ComplexMap
    {
        ComplexArray data;
        GridShape grid;
        double frequency_hz = 0.0; // 0 when not tied to one frequency
        ComplexUnit unit = ComplexUnit::volt_per_meter;
        Provenance provenance = Provenance::simulated;
    };

    // Real samples on the receiver grid. data is n_u x n_v.
    struct RealMap
    {
        RealArray data;
        GridShape grid;
        double frequency_hz = 0.0; // 0 for frequency-averaged maps
        RealUnit unit = RealUnit::linear;
        Provenance provenance = Provenance::simulated;
    };

    // Throws ValidationError when dimensions disagree with the grid or an
    // entry is non-finite (or negative for linear/normalized maps).
    void check_map(const ComplexMap &m);
    void check_map(const RealMap &m);
}

#endif
