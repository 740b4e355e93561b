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

#ifndef rssmap_mapops_H
#define rssmap_mapops_H

#include "rssmap/maps.hpp"

#include <cstdint>
#include <span>

namespace rssmap
{
    RealMap magnitude(const ComplexMap &m);

    // Divides by the maximum. Throws NumericalError for an all-zero map.
    RealMap normalize_max(const RealMap &m);

    enum class AverageMode
    {
        magnitude, // mean of |S| over frequencies
        complex    // |mean of S| over frequencies
    };

    // Throws ValidationError for an empty list or mismatched grids.
    RealMap freq_average(std::span<const ComplexMap> maps, AverageMode mode = AverageMode::magnitude);

    enum AttenuationFlag : std::uint8_t
    {
        cell_ok = 0,
        cell_below_floor = 1, // both inputs below the floor, set to 0 dB
        cell_clamped = 2      // |ratio| beyond the dB limit, clamped
    };

    inline constexpr double attenuation_limit_db = 200.0;
    inline constexpr double default_noise_floor = 1e-12;

    struct AttenuationMap
    {
        RealMap map; // unit db
        Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> flags;

        Eigen::Index count(AttenuationFlag flag) const { return (flags == std::uint8_t(flag)).count(); }
    };

    // M(m) = 20 log10(fp(m) / tar(m)) in dB. Both inputs are linear magnitudes
    // on the same grid.
    AttenuationMap attenuation_map(const RealMap &fp, const RealMap &tar, double noise_floor = default_noise_floor);
}

#endif
