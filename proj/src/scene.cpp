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

#include "rssmap/scene.hpp"
#include "rssmap/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rssmap
{
    namespace
    {
        constexpr std::array<std::string_view, wall_count> wall_names = {"right", "left", "ceiling",
                                                                          "ground", "back_rx", "back_tx"};

        bool finite(const Vec3d &p) { return p.allFinite(); }

        bool strictly_inside(const RoomBox &room, const Vec3d &p)
        {
            return p.x() > 0.0 && p.x() < room.size_x && p.y() > 0.0 && p.y() < room.size_y && p.z() > 0.0 &&
                   p.z() < room.size_z;
        }

        bool inside_closed(const RoomBox &room, const Vec3d &p, double tol)
        {
            return p.x() >= -tol && p.x() <= room.size_x + tol && p.y() >= -tol && p.y() <= room.size_y + tol &&
                   p.z() >= -tol && p.z() <= room.size_z + tol;
        }

        [[noreturn]] void fail(const std::string &what) { throw ValidationError(what); }
    }

    std::string_view wall_name(WallId wall)
    {
        return wall_names[static_cast<std::size_t>(wall)];
    }

    WallId wall_from_name(std::string_view name)
    {
        for (std::size_t i = 0; i < wall_count; ++i)
            if (wall_names[i] == name)
                return all_walls[i];
        throw ValidationError("unknown wall '" + std::string(name) + "'");
    }

    const SceneConfig &validate_scene(const SceneConfig &cfg)
    {
        const RoomBox &room = cfg.room;
        if (!(room.size_x > 0.0) || !std::isfinite(room.size_x))
            fail("room.size_x must be positive");
        if (!(room.size_y > 0.0) || !std::isfinite(room.size_y))
            fail("room.size_y must be positive");
        if (!(room.size_z > 0.0) || !std::isfinite(room.size_z))
            fail("room.size_z must be positive");

        if (!finite(cfg.tx.position) || !strictly_inside(room, cfg.tx.position))
            fail("tx.position outside room");
        if (!std::isfinite(cfg.tx.dipole_moment.real()) || !std::isfinite(cfg.tx.dipole_moment.imag()) ||
            cfg.tx.dipole_moment == cdouble(0.0))
            fail("tx.moment must be nonzero");

        const RxGrid &g = cfg.grid;
        constexpr double axis_tol = 1e-9;
        if (!finite(g.origin))
            fail("grid.origin must be finite");
        if (!finite(g.u_axis) || std::abs(g.u_axis.norm() - 1.0) > axis_tol)
            fail("grid.u_axis must be a unit vector");
        if (!finite(g.v_axis) || std::abs(g.v_axis.norm() - 1.0) > axis_tol)
            fail("grid.v_axis must be a unit vector");
        if (std::abs(g.u_axis.dot(g.v_axis)) > axis_tol)
            fail("grid.u_axis and grid.v_axis must be orthogonal");
        if (g.n_u < 1)
            fail("grid.n_u must be at least 1");
        if (g.n_v < 1)
            fail("grid.n_v must be at least 1");
        if (!(g.step_u > 0.0) || !std::isfinite(g.step_u))
            fail("grid.step_u must be positive");
        if (!(g.step_v > 0.0) || !std::isfinite(g.step_v))
            fail("grid.step_v must be positive");
        // The room is convex, so the four corners decide containment.
        const double tol = 1e-9 * std::max({room.size_x, room.size_y, room.size_z});
        for (Eigen::Index i : {Eigen::Index(0), g.n_u - 1})
            for (Eigen::Index j : {Eigen::Index(0), g.n_v - 1})
                if (!inside_closed(room, g.point(i, j), tol))
                    fail("grid sample (" + std::to_string(i) + "," + std::to_string(j) + ") outside room");

        if (cfg.freqs.hz.empty())
            fail("freqs.list must not be empty");
        for (std::size_t i = 0; i < cfg.freqs.hz.size(); ++i)
        {
            const double f = cfg.freqs.hz[i];
            if (!(f > 0.0) || !std::isfinite(f))
                fail("freqs.list[" + std::to_string(i) + "] must be positive");
            if (i > 0 && !(f > cfg.freqs.hz[i - 1]))
                fail("freqs.list must be strictly increasing");
        }
        return cfg;
    }

    Vec3d mirror_across(const RoomBox &room, WallId wall, const Vec3d &p)
    {
        Vec3d m = p;
        switch (wall)
        {
        case WallId::right:
            m.x() = 2.0 * room.size_x - p.x();
            break;
        case WallId::left:
            m.x() = -p.x();
            break;
        case WallId::ceiling:
            m.z() = 2.0 * room.size_z - p.z();
            break;
        case WallId::ground:
            m.z() = -p.z();
            break;
        case WallId::back_rx:
            m.y() = 2.0 * room.size_y - p.y();
            break;
        case WallId::back_tx:
            m.y() = -p.y();
            break;
        }
        return m;
    }

    std::array<ImageSource, wall_count> image_sources(const RoomBox &room, const Transmitter &tx)
    {
        std::array<ImageSource, wall_count> out;
        for (std::size_t i = 0; i < wall_count; ++i)
            out[i] = {all_walls[i], mirror_across(room, all_walls[i], tx.position)};
        return out;
    }

    Eigen::Matrix3Xd grid_points(const RxGrid &grid)
    {
        Eigen::Matrix3Xd pts(3, grid.size());
        Eigen::Index c = 0;
        for (Eigen::Index j = 0; j < grid.n_v; ++j)
            for (Eigen::Index i = 0; i < grid.n_u; ++i)
                pts.col(c++) = grid.point(i, j);
        return pts;
    }

    SceneConfig bundled_scene()
    {
        SceneConfig s;
        s.room = {5.6, 3.6, 2.8};
        s.tx.position = Vec3d(2.8, 0.10, 1.0);
        s.tx.dipole_moment = 1.0;

        RxGrid &g = s.grid;
        g.n_u = 162;
        g.n_v = 80;
        g.step_u = 0.031;
        g.step_v = 0.031;
        g.u_axis = Vec3d::UnitX();
        g.v_axis = Vec3d::UnitZ();
        // Aperture centred on x = size_x/2 and z = size_z/2, plane 0.283 m
        // in front of the y = size_y wall.
        g.origin = Vec3d(2.8 - double(g.n_u - 1) * g.step_u / 2.0, 3.6 - 0.283,
                         1.4 - double(g.n_v - 1) * g.step_v / 2.0);

        s.freqs.hz = {2.48e9};
        return s;
    }

    FrequencySpec bundled_band()
    {
        FrequencySpec f;
        for (int n = 0; n <= 10; ++n)
            f.hz.push_back(2.40e9 + 10e6 * n);
        return f;
    }

    SceneConfig decimate_grid(const SceneConfig &cfg, Eigen::Index factor)
    {
        if (factor < 1)
            throw ValidationError("decimation factor must be at least 1");
        SceneConfig s = cfg;
        s.grid.n_u = std::max<Eigen::Index>(1, cfg.grid.n_u / factor);
        s.grid.n_v = std::max<Eigen::Index>(1, cfg.grid.n_v / factor);
        s.grid.step_u = cfg.grid.step_u * double(factor);
        s.grid.step_v = cfg.grid.step_v * double(factor);
        return s;
    }
}
