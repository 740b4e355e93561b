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

#include "rssmap/forward.hpp"
#include "rssmap/error.hpp"
#include "rssmap/fields.hpp"

#include <cmath>
#include <string>

namespace rssmap
{
    void validate_reflections(const ReflectionSet &gammas)
    {
        for (std::size_t i = 0; i < wall_count; ++i)
        {
            const cdouble g = gammas.gamma[i];
            const double mag = std::abs(g);
            if (!std::isfinite(g.real()) || !std::isfinite(g.imag()) || mag > 1.0 + 1e-12)
                throw ValidationError("gamma." + std::string(wall_name(all_walls[i])) + " magnitude must be in [0, 1]");
        }
    }

    ReflectionSet concrete_reflections()
    {
        return ReflectionSet::uniform(std::polar(0.203, deg_to_rad(-13.5)));
    }

    ReflectionSet fitted_reflections()
    {
        ReflectionSet s;
        s[WallId::right] = std::polar(0.19, deg_to_rad(95.0));
        s[WallId::left] = std::polar(0.15, deg_to_rad(55.0));
        s[WallId::ceiling] = std::polar(0.11, deg_to_rad(0.0));
        s[WallId::ground] = std::polar(0.17, deg_to_rad(17.0));
        s[WallId::back_rx] = std::polar(0.11, deg_to_rad(243.0));
        s[WallId::back_tx] = std::polar(0.70, deg_to_rad(287.0));
        return s;
    }

    ComplexArray FieldBasis::source_map(Eigen::Index source) const
    {
        return columns.col(source).reshaped(grid.n_u, grid.n_v).array();
    }

    FieldBasis field_basis(const SceneConfig &scene, double frequency_hz)
    {
        validate_scene(scene);
        const double k = wavenumber(frequency_hz);
        const auto images = image_sources(scene.room, scene.tx);
        const Eigen::Matrix3Xd pts = grid_points(scene.grid);
        const cdouble p0 = scene.tx.dipole_moment;

        FieldBasis basis;
        basis.grid = GridShape::of(scene.grid);
        basis.frequency_hz = frequency_hz;
        basis.columns.resize(pts.cols(), 1 + Eigen::Index(wall_count));
        for (Eigen::Index c = 0; c < pts.cols(); ++c)
        {
            const Vec3d obs = pts.col(c);
            basis.columns(c, 0) = dipole_ez(scene.tx.position, obs, k, p0);
            for (std::size_t i = 0; i < wall_count; ++i)
                basis.columns(c, Eigen::Index(i) + 1) = dipole_ez(images[i].position, obs, k, p0);
        }
        return basis;
    }

    ComplexMap assemble(const FieldBasis &basis, const ReflectionSet &gammas)
    {
        Eigen::VectorXcd weights(1 + Eigen::Index(wall_count));
        weights(0) = 1.0;
        for (std::size_t i = 0; i < wall_count; ++i)
            weights(Eigen::Index(i) + 1) = gammas.gamma[i];

        ComplexMap m;
        m.grid = basis.grid;
        m.frequency_hz = basis.frequency_hz;
        m.data = (basis.columns * weights).reshaped(basis.grid.n_u, basis.grid.n_v).array();
        return m;
    }

    ComplexMap total_field_map(const SceneConfig &scene, const ReflectionSet &gammas, double frequency_hz)
    {
        validate_scene(scene);
        validate_reflections(gammas);
        const double k = wavenumber(frequency_hz);
        const auto images = image_sources(scene.room, scene.tx);
        const cdouble p0 = scene.tx.dipole_moment;

        ComplexMap m;
        m.grid = GridShape::of(scene.grid);
        m.frequency_hz = frequency_hz;
        m.data.resize(scene.grid.n_u, scene.grid.n_v);
        for (Eigen::Index j = 0; j < scene.grid.n_v; ++j)
            for (Eigen::Index i = 0; i < scene.grid.n_u; ++i)
            {
                const Vec3d obs = scene.grid.point(i, j);
                cdouble e = dipole_ez(scene.tx.position, obs, k, p0);
                for (std::size_t w = 0; w < wall_count; ++w)
                    e += gammas.gamma[w] * dipole_ez(images[w].position, obs, k, p0);
                m.data(i, j) = e;
            }
        return m;
    }

    std::vector<ComplexMap> sweep_maps(const SceneConfig &scene, const ReflectionSet &gammas)
    {
        validate_scene(scene);
        std::vector<ComplexMap> maps;
        maps.reserve(scene.freqs.hz.size());
        for (double f : scene.freqs.hz)
            maps.push_back(total_field_map(scene, gammas, f));
        return maps;
    }
}
