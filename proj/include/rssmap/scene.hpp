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

#ifndef rssmap_scene_H
#define rssmap_scene_H

#include "rssmap/types.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace rssmap
{
    // Axis-aligned room with one floor corner at the origin.
    // Boundary planes: x=0, x=size_x, y=0, y=size_y, z=0, z=size_z.
    struct RoomBox
    {
        double size_x = 0.0;
        double size_y = 0.0;
        double size_z = 0.0;
    };

    // Wall identities in the frozen coefficient order Gamma_1..Gamma_6.
    enum class WallId : int
    {
        right = 0, // x = size_x
        left,      // x = 0
        ceiling,   // z = size_z
        ground,    // z = 0
        back_rx,   // y = size_y
        back_tx    // y = 0
    };

    inline constexpr std::size_t wall_count = 6;
    inline constexpr std::array<WallId, wall_count> all_walls = {WallId::right, WallId::left, WallId::ceiling,
                                                                 WallId::ground, WallId::back_rx, WallId::back_tx};

    std::string_view wall_name(WallId wall);
    WallId wall_from_name(std::string_view name); // throws ValidationError

    // Vertical (z-oriented) Hertzian dipole.
    struct Transmitter
    {
        Vec3d position = Vec3d::Zero();
        cdouble dipole_moment = 1.0; // p0 = I0 * l in A*m
    };

    // Planar receiver grid. Sample (i, j) = origin + i*step_u*u_axis + j*step_v*v_axis.
    struct RxGrid
    {
        Vec3d origin = Vec3d::Zero();
        Vec3d u_axis = Vec3d::UnitX();
        Vec3d v_axis = Vec3d::UnitZ();
        Eigen::Index n_u = 0;
        Eigen::Index n_v = 0;
        double step_u = 0.0;
        double step_v = 0.0;

        Eigen::Index size() const { return n_u * n_v; }
        Vec3d point(Eigen::Index i, Eigen::Index j) const
        {
            return origin + (double(i) * step_u) * u_axis + (double(j) * step_v) * v_axis;
        }
    };

    // Frequencies in Hz, strictly increasing.
    struct FrequencySpec
    {
        std::vector<double> hz;
    };

    struct SceneConfig
    {
        RoomBox room;
        Transmitter tx;
        RxGrid grid;
        FrequencySpec freqs;
    };

    struct ImageSource
    {
        WallId wall;
        Vec3d position;
    };

    // Returns cfg unchanged if every invariant holds, otherwise throws
    // ValidationError naming the first violated field.
    const SceneConfig &validate_scene(const SceneConfig &cfg);

    Vec3d mirror_across(const RoomBox &room, WallId wall, const Vec3d &p);

    // Six first-order images in WallId order.
    std::array<ImageSource, wall_count> image_sources(const RoomBox &room, const Transmitter &tx);

    // 3 x (n_u*n_v) matrix, columns in row-major order (v outer, u inner).
    Eigen::Matrix3Xd grid_points(const RxGrid &grid);

    // Bundled measurement room: 5.6 m (x) by 3.6 m (y) by 2.8 m (z), Tx 0.10 m
    // in front of the back wall at 1 m height, 162 x 80 grid at 3.1 cm step on
    // the plane 0.283 m in front of the opposite wall. Single slice at 2.48 GHz.
    SceneConfig bundled_scene();

    // 2.40 GHz to 2.50 GHz in 10 MHz steps (11 frequencies).
    FrequencySpec bundled_band();

    // Same room with every grid count divided by `factor` and step multiplied by it.
    SceneConfig decimate_grid(const SceneConfig &cfg, Eigen::Index factor);
}

#endif
