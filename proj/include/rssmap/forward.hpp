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

#ifndef rssmap_forward_H
#define rssmap_forward_H

#include "rssmap/maps.hpp"
#include "rssmap/scene.hpp"

#include <array>
#include <vector>

namespace rssmap
{
    // Complex reflection coefficients, one per wall, in WallId order.
    struct ReflectionSet
    {
        std::array<cdouble, wall_count> gamma{};

        cdouble &operator[](WallId w) { return gamma[static_cast<std::size_t>(w)]; }
        const cdouble &operator[](WallId w) const { return gamma[static_cast<std::size_t>(w)]; }

        static ReflectionSet uniform(cdouble g)
        {
            ReflectionSet s;
            s.gamma.fill(g);
            return s;
        }
        static ReflectionSet zero() { return uniform(0.0); }
    };

    // Throws ValidationError unless every |Gamma_i| is in [0, 1] and finite.
    void validate_reflections(const ReflectionSet &gammas);

    // Uniform initial set 0.203 at -13.5 degrees (concrete-like wall).
    ReflectionSet concrete_reflections();

    // Calibrated set reported for the measurement room:
    // 0.19@95, 0.15@55, 0.11@0, 0.17@17, 0.11@243, 0.70@287.
    ReflectionSet fitted_reflections();

    // Per-source fields on the grid at one frequency: column 0 is the direct
    // path, columns 1..6 the images in WallId order. Rows are grid cells in
    // row-major order. The total field for any Gamma is basis * [1, Gamma].
    struct FieldBasis
    {
        Eigen::MatrixXcd columns; // n_cells x 7
        GridShape grid;
        double frequency_hz = 0.0;

        ComplexArray source_map(Eigen::Index source) const;
    };

    FieldBasis field_basis(const SceneConfig &scene, double frequency_hz);

    // Direct + sum_i Gamma_i * image_i assembled from a cached basis.
    ComplexMap assemble(const FieldBasis &basis, const ReflectionSet &gammas);

    // Point-by-point evaluation: direct first, then Gamma_1..Gamma_6.
    ComplexMap total_field_map(const SceneConfig &scene, const ReflectionSet &gammas, double frequency_hz);

    // One total_field_map per scene frequency, in order.
    std::vector<ComplexMap> sweep_maps(const SceneConfig &scene, const ReflectionSet &gammas);
}

#endif
