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

#ifndef rssmap_types_H
#define rssmap_types_H

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

namespace rssmap
{
    template <typename Scalar>
    using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

    using Vec3d = Vec3<double>;
    using cdouble = std::complex<double>;

    // Map storage: n_u rows by n_v columns. Eigen's column-major layout then
    // gives the row-major (v outer, u inner) cell order used everywhere else.
    using ComplexArray = Eigen::ArrayXXcd;
    using RealArray = Eigen::ArrayXXd;

    template <typename Scalar>
    inline constexpr Scalar speed_of_light = Scalar(299792458.0);

    // Free-space wave impedance in ohms.
    template <typename Scalar>
    inline constexpr Scalar free_space_impedance = Scalar(376.730);

    inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
    inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

    // Wraps an angle in degrees to [0, 360).
    inline double wrap_degrees(double deg)
    {
        double w = std::fmod(deg, 360.0);
        if (w < 0.0)
            w += 360.0;
        return w >= 360.0 ? 0.0 : w;
    }
}

#endif
