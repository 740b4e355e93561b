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

#ifndef rssmap_calibrate_H
#define rssmap_calibrate_H

#include "rssmap/forward.hpp"
#include "rssmap/maps.hpp"
#include "rssmap/scene.hpp"
#include "rssmap/similarity.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rssmap
{
    struct CalibrationConfig
    {
        double init_magnitude = 0.2;
        double init_phase_deg = 0.0;
        int restarts = 8;
        int max_objective_evals = 20000; // per restart
        double convergence_tol = 1e-6;
        bool use_shift_max = false;
        ShiftSearch shift_search{};
        // Correlate against the magnitude averaged over every scene frequency.
        bool average_frequencies = false;
        // Working frequency when not averaging; 0 picks the reference map's
        // frequency if it is one of the scene's, else the first scene frequency.
        double frequency_hz = 0.0;
        std::uint64_t rng_seed = 0;
        bool record_trace = false;
    };

    void validate_calibration_config(const CalibrationConfig &cfg);

    // Correlation objective over a cached field basis. Holds the centred
    // reference so each evaluation is one complex matrix-vector product per
    // frequency plus one pass over the cells.
    class CalibrationObjective
    {
    public:
        CalibrationObjective(const RealMap &reference, std::vector<FieldBasis> basis, bool use_shift_max = false,
                             ShiftSearch search = {});

        // Model magnitude map (frequency-averaged when the basis holds several
        // frequencies) for the given coefficients.
        RealArray model_magnitude(const ReflectionSet &gammas) const;

        // Correlation between reference and model (rho, or rho_max when
        // shift-maximized). nullopt for a constant model map.
        std::optional<double> correlation(const ReflectionSet &gammas) const;

        // -rho, or +1 for a constant model map.
        double operator()(const ReflectionSet &gammas) const;

        std::span<const FieldBasis> basis() const { return basis_; }
        const RealMap &reference() const { return reference_; }

    private:
        RealMap reference_;
        std::vector<FieldBasis> basis_;
        bool use_shift_max_;
        ShiftSearch search_;
        Eigen::VectorXd ref_centered_;
        double ref_norm_ = 0.0;
    };

    // 12 optimizer parameters: six magnitudes then six phases in radians.
    Eigen::VectorXd to_parameters(const ReflectionSet &gammas);
    // Magnitudes clamped to [0, 1], phases wrapped.
    ReflectionSet from_parameters(const Eigen::VectorXd &params);

    struct RestartTrace
    {
        ReflectionSet initial;
        double initial_rho = 0.0;
        double final_rho = 0.0;
        int evals = 0;
    };

    struct TracePoint
    {
        int restart = 0;
        int eval = 0;
        double rho = 0.0;
    };

    struct CalibrationResult
    {
        ReflectionSet gammas; // phases in [0, 360) degrees when printed
        double rho_achieved = 0.0;
        double rho_initial = 0.0; // at the restart-0 starting point
        int evals_used = 0;
        int restart_index_of_best = 0;
        std::vector<RestartTrace> restarts;
        // mean |image_i| / mean |direct| over the grid (and frequencies).
        std::array<double, wall_count> sensitivity{};
        // Set when no restart improved on its starting point.
        bool no_improvement = false;
        std::vector<TracePoint> trace; // improvements only, when record_trace
    };

    // Per-wall strength of the image field relative to the direct field.
    std::array<double, wall_count> wall_sensitivity(std::span<const FieldBasis> basis);

    // Working frequencies chosen for the given reference and configuration.
    std::vector<double> calibration_frequencies(const SceneConfig &scene, const RealMap &reference,
                                                const CalibrationConfig &cfg);

    // Multi-start bounded Nelder-Mead on -rho(reference, |E_tot(Gamma)|).
    // Restart 0 starts at (init_magnitude, init_phase_deg) on every wall,
    // later restarts at uniform |Gamma| in [0, 0.5], phase in [0, 360) drawn
    // from rng_seed.
    CalibrationResult calibrate(const SceneConfig &scene, const RealMap &reference, const CalibrationConfig &cfg);
}

#endif
