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

#include "rssmap/synth.hpp"
#include "rssmap/error.hpp"
#include "rssmap/mapops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rssmap
{
    RealArray shift_with_edge_hold(const RealArray &in, Eigen::Index du, Eigen::Index dv)
    {
        const Eigen::Index n_u = in.rows(), n_v = in.cols();
        RealArray out(n_u, n_v);
        for (Eigen::Index j = 0; j < n_v; ++j)
            for (Eigen::Index i = 0; i < n_u; ++i)
                out(i, j) = in(std::clamp<Eigen::Index>(i - du, 0, n_u - 1), std::clamp<Eigen::Index>(j - dv, 0, n_v - 1));
        return out;
    }

    SynthOutput synth_reference(const SynthSpec &spec)
    {
        validate_scene(spec.scene);
        validate_reflections(spec.gammas_true);
        if (!(spec.noise_sigma_db >= 0.0) || !std::isfinite(spec.noise_sigma_db))
            throw ValidationError("noise_sigma_db must be nonnegative");
        const RxGrid &g = spec.scene.grid;
        if (std::abs(spec.shift_u) > g.n_u - 1 || std::abs(spec.shift_v) > g.n_v - 1)
            throw ValidationError("synthetic shift exceeds grid bounds");

        SynthOutput out;
        if (spec.average_frequencies)
        {
            const auto maps = sweep_maps(spec.scene, spec.gammas_true);
            out.map = freq_average(maps);
            out.truth.frequency_hz = 0.0;
        }
        else
        {
            const double f = spec.frequency_hz > 0.0 ? spec.frequency_hz : spec.scene.freqs.hz.front();
            out.map = magnitude(total_field_map(spec.scene, spec.gammas_true, f));
            out.truth.frequency_hz = f;
        }
        out.map.provenance = Provenance::synthetic;

        if (spec.noise_sigma_db > 0.0)
        {
            std::mt19937_64 rng(spec.rng_seed);
            std::normal_distribution<double> noise(0.0, spec.noise_sigma_db);
            for (Eigen::Index j = 0; j < g.n_v; ++j)
                for (Eigen::Index i = 0; i < g.n_u; ++i)
                    out.map.data(i, j) *= std::pow(10.0, noise(rng) / 20.0);
        }
        if (spec.shift_u != 0 || spec.shift_v != 0)
            out.map.data = shift_with_edge_hold(out.map.data, spec.shift_u, spec.shift_v);

        out.truth.gammas_true = spec.gammas_true;
        out.truth.noise_sigma_db = spec.noise_sigma_db;
        out.truth.shift_u = spec.shift_u;
        out.truth.shift_v = spec.shift_v;
        out.truth.rng_seed = spec.rng_seed;
        return out;
    }
}
