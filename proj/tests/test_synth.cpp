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

#include <catch_amalgamated.hpp>

#include "rssmap/calibrate.hpp"
#include "rssmap/error.hpp"
#include "rssmap/mapops.hpp"
#include "rssmap/synth.hpp"

#include <algorithm>

using namespace rssmap;
using Catch::Matchers::WithinAbs;

namespace
{
    SynthSpec base_spec(Eigen::Index factor = 4)
    {
        SynthSpec spec;
        spec.scene = decimate_grid(bundled_scene(), factor);
        spec.gammas_true = fitted_reflections();
        return spec;
    }
}

TEST_CASE("Synth - noiseless unshifted output is the forward magnitude")
{
    const SynthSpec spec = base_spec();
    const SynthOutput out = synth_reference(spec);
    const RealMap want = magnitude(total_field_map(spec.scene, spec.gammas_true, 2.48e9));
    CHECK((out.map.data == want.data).all());
    CHECK(out.map.provenance == Provenance::synthetic);
    CHECK(out.map.frequency_hz == 2.48e9);
    CHECK(out.truth.gammas_true.gamma == spec.gammas_true.gamma);
    CHECK(out.truth.frequency_hz == 2.48e9);
}

TEST_CASE("Synth - planted shift is found by the shift search")
{
    SynthSpec spec = base_spec();
    const RealMap clean = synth_reference(spec).map;
    spec.shift_u = 2;
    const SynthOutput out = synth_reference(spec);
    CHECK(out.truth.shift_u == 2);
    CHECK(out.truth.shift_v == 0);
    const CorrelationResult r = pearson_max_shift(clean, out.map, {5, 5, 0.5});
    CHECK(r.shift_u == -2);
    CHECK(r.shift_v == 0);
    CHECK_THAT(r.rho, WithinAbs(1.0, 1e-12));
}

TEST_CASE("Synth - edge-hold shift")
{
    RealArray in(3, 2);
    in << 1, 4, 2, 5, 3, 6;
    const RealArray out = shift_with_edge_hold(in, 1, -1);
    RealArray want(3, 2);
    want << 4, 4, 4, 4, 5, 5;
    CHECK((out == want).all());
    CHECK((shift_with_edge_hold(in, 0, 0) == in).all());
}

TEST_CASE("Synth - seeded noise is reproducible")
{
    SynthSpec spec = base_spec();
    spec.noise_sigma_db = 1.0;
    spec.rng_seed = 99;
    const RealArray a = synth_reference(spec).map.data;
    const RealArray b = synth_reference(spec).map.data;
    CHECK((a == b).all());
    spec.rng_seed = 100;
    CHECK((synth_reference(spec).map.data != a).any());
}

TEST_CASE("Synth - noise is zero-mean Gaussian in dB")
{
    SynthSpec spec = base_spec(1); // 12960 cells
    const RealArray clean = synth_reference(spec).map.data;
    for (double sigma : {1.0, 3.0})
    {
        spec.noise_sigma_db = sigma;
        spec.rng_seed = 7;
        const RealArray noisy = synth_reference(spec).map.data;
        const RealArray db = 20.0 * (noisy / clean).log10();
        const double n = double(db.size());
        const double mean = db.mean();
        const double sd = std::sqrt((db - mean).square().sum() / (n - 1.0));
        CHECK(std::abs(mean) <= 4.0 * sigma / std::sqrt(n));
        CHECK(std::abs(sd / sigma - 1.0) <= 0.10);
    }
}

TEST_CASE("Synth - recovered correlation falls with noise")
{
    std::array<double, 3> median{};
    const std::array<double, 3> sigmas{0.0, 1.0, 3.0};
    for (std::size_t s = 0; s < sigmas.size(); ++s)
    {
        std::vector<double> rhos;
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
        {
            SynthSpec spec = base_spec();
            spec.noise_sigma_db = sigmas[s];
            spec.rng_seed = seed;
            CalibrationConfig cfg;
            cfg.restarts = 1;
            cfg.rng_seed = seed;
            rhos.push_back(calibrate(spec.scene, synth_reference(spec).map, cfg).rho_achieved);
        }
        std::sort(rhos.begin(), rhos.end());
        median[s] = 0.5 * (rhos[4] + rhos[5]);
    }
    CHECK(median[0] >= 0.999);
    CHECK(median[0] >= median[1]);
    CHECK(median[1] >= median[2]);
}

TEST_CASE("Synth - frequency selection and averaging")
{
    SynthSpec spec = base_spec();
    spec.scene.freqs.hz = {2.41e9, 2.47e9};
    spec.frequency_hz = 2.47e9;
    CHECK((synth_reference(spec).map.data == magnitude(total_field_map(spec.scene, spec.gammas_true, 2.47e9)).data).all());
    spec.frequency_hz = 0.0;
    CHECK(synth_reference(spec).map.frequency_hz == 2.41e9);
    spec.average_frequencies = true;
    const SynthOutput avg = synth_reference(spec);
    CHECK((avg.map.data == freq_average(sweep_maps(spec.scene, spec.gammas_true)).data).all());
    CHECK(avg.truth.frequency_hz == 0.0);
}

TEST_CASE("Synth - invalid specifications")
{
    SynthSpec spec = base_spec();
    spec.noise_sigma_db = -1.0;
    CHECK_THROWS_AS(synth_reference(spec), ValidationError);
    spec = base_spec();
    spec.shift_u = spec.scene.grid.n_u;
    CHECK_THROWS_AS(synth_reference(spec), ValidationError);
    spec = base_spec();
    spec.shift_v = -spec.scene.grid.n_v;
    CHECK_THROWS_AS(synth_reference(spec), ValidationError);
    spec = base_spec();
    spec.scene.room.size_x = -1.0;
    CHECK_THROWS_AS(synth_reference(spec), ValidationError);
    spec = base_spec();
    spec.gammas_true[WallId::left] = 2.0;
    CHECK_THROWS_AS(synth_reference(spec), ValidationError);
}
