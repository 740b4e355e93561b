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

#ifndef rssmap_fields_H
#define rssmap_fields_H

#include "rssmap/error.hpp"
#include "rssmap/types.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace rssmap
{
    // k = 2*pi*f/c in rad/m.
    template <typename Scalar = double>
    Scalar wavenumber(Scalar frequency_hz)
    {
        if (!(frequency_hz > Scalar(0)) || !std::isfinite(frequency_hz))
            throw ValidationError("frequency must be positive");
        return Scalar(2) * std::numbers::pi_v<Scalar> * frequency_hz / speed_of_light<Scalar>;
    }

    // Vertical field E_z radiated by a z-oriented Hertzian dipole with moment p0
    // at `src`, observed at `obs`. Near-field terms included, e^{+jwt} time
    // convention (propagation factor e^{-jkr}):
    //
    //   E_r     = eta p0 cos(t) / (2 pi r^2) (1 + 1/(jkr)) e^{-jkr}
    //   E_theta = j eta k p0 sin(t) / (4 pi r) (1 + 1/(jkr) - 1/(kr)^2) e^{-jkr}
    //   E_z     = E_r cos(t) - E_theta sin(t)
    //
    // Only squared direction cosines enter, so swapping src and obs gives a
    // bit-identical result.
    template <typename Scalar>
    std::complex<Scalar> dipole_ez(const Vec3<Scalar> &src, const Vec3<Scalar> &obs, Scalar k,
                                   std::complex<Scalar> p0)
    {
        using C = std::complex<Scalar>;
        const Vec3<Scalar> d = obs - src;
        const Scalar rho2 = d.x() * d.x() + d.y() * d.y();
        const Scalar z2 = d.z() * d.z();
        const Scalar r2 = rho2 + z2;
        if (!(r2 > Scalar(0)))
            throw NumericalError("zero separation");

        const Scalar r = std::sqrt(r2);
        const Scalar cos2 = z2 / r2;
        const Scalar sin2 = rho2 / r2;
        const Scalar kr = k * r;
        const C inv_jkr(Scalar(0), -Scalar(1) / kr);
        const Scalar inv_kr2 = Scalar(1) / (kr * kr);
        const C phase = std::polar(Scalar(1), -kr);
        const Scalar eta = free_space_impedance<Scalar>;
        const Scalar pi = std::numbers::pi_v<Scalar>;

        const C radial = (eta * cos2 / (Scalar(2) * pi * r2)) * (Scalar(1) + inv_jkr);
        const C polar = C(Scalar(0), eta * k * sin2 / (Scalar(4) * pi * r)) * (Scalar(1) + inv_jkr - inv_kr2);
        return p0 * (radial - polar) * phase;
    }
}

#endif
