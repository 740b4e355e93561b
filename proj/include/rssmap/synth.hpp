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

#ifndef rssmap_synth_H
#define rssmap_synth_H

#include "rssmap/forward.hpp"
#include "rssmap/maps.hpp"
#include "rssmap/scene.hpp"

#include <cstdint>

namespace rssmap
{
    struct SynthSpec
    {
        SceneConfig scene;
        ReflectionSet gammas_true;
        double noise_sigma_db = 0.0;
        Eigen::Index shift_u = 0;
        Eigen::Index shift_v = 0;
        std::uint64_t rng_seed = 0;
        // 0 uses the first scene frequency. Ignored when averaging.
        double frequency_hz = 0.0;
        bool average_frequencies = false;
    };

    // Ground truth kept apart from the map so a calibrator never sees it.
    struct SynthTruth
    {
        ReflectionSet gammas_true;
        double noise_sigma_db = 0.0;
        Eigen::Index shift_u = 0;
        Eigen::Index shift_v = 0;
        std::uint64_t rng_seed = 0;
        double frequency_hz = 0.0;
    };

    struct SynthOutput
    {
        RealMap map; // linear magnitude, provenance synthetic
        SynthTruth truth;
    };

    // |E_tot(gammas_true)| with multiplicative log-normal noise (each cell
    // times 10^(n/20), n ~ N(0, sigma_db)), then moved by (shift_u, shift_v)
    // pixels: out(i, j) = in(i - shift_u, j - shift_v). Cells uncovered by the
    // shift repeat the nearest edge sample so the map keeps the grid size.
    SynthOutput synth_reference(const SynthSpec &spec);

    // out(i, j) = in(clamp(i - du), clamp(j - dv)).
    RealArray shift_with_edge_hold(const RealArray &in, Eigen::Index du, Eigen::Index dv);
}

#endif
