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

#include "rssmap/calibrate.hpp"
#include "rssmap/error.hpp"
#include "rssmap/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace rssmap
{
    namespace
    {
        Eigen::VectorXcd weights_of(const ReflectionSet &gammas)
        {
            Eigen::VectorXcd w(1 + Eigen::Index(wall_count));
            w(0) = 1.0;
            for (std::size_t i = 0; i < wall_count; ++i)
                w(Eigen::Index(i) + 1) = gammas.gamma[i];
            return w;
        }

        constexpr double two_pi = 2.0 * std::numbers::pi;
    }

    void validate_calibration_config(const CalibrationConfig &cfg)
    {
        if (!(cfg.init_magnitude >= 0.0 && cfg.init_magnitude <= 1.0))
            throw ValidationError("init_magnitude must be in [0, 1]");
        if (!std::isfinite(cfg.init_phase_deg))
            throw ValidationError("init_phase_deg must be finite");
        if (cfg.restarts < 1)
            throw ValidationError("restarts must be at least 1");
        if (cfg.max_objective_evals < 1)
            throw ValidationError("max_objective_evals must be positive");
        if (!(cfg.convergence_tol > 0.0))
            throw ValidationError("convergence_tol must be positive");
    }

    CalibrationObjective::CalibrationObjective(const RealMap &reference, std::vector<FieldBasis> basis,
                                               bool use_shift_max, ShiftSearch search)
        : reference_(reference), basis_(std::move(basis)), use_shift_max_(use_shift_max), search_(search)
    {
        check_map(reference_);
        if (reference_.unit == RealUnit::db)
            throw ValidationError("calibration reference must be a linear or normalized magnitude map");
        if (basis_.empty())
            throw ValidationError("calibration needs at least one frequency");
        for (const FieldBasis &b : basis_)
            if (!same_grid(b.grid, reference_.grid))
                throw ValidationError("reference map is not on the scene grid");
        if (use_shift_max_)
            validate_search(search_, reference_.grid.n_u, reference_.grid.n_v);

        const Eigen::VectorXd flat = reference_.data.reshaped();
        ref_centered_ = flat.array() - flat.mean();
        ref_norm_ = ref_centered_.norm();
        if (!(ref_norm_ > 0.0))
            throw ValidationError("calibration reference is constant");
    }

    RealArray CalibrationObjective::model_magnitude(const ReflectionSet &gammas) const
    {
        const Eigen::VectorXcd w = weights_of(gammas);
        Eigen::VectorXd mag = (basis_.front().columns * w).cwiseAbs();
        for (std::size_t f = 1; f < basis_.size(); ++f)
            mag += (basis_[f].columns * w).cwiseAbs();
        if (basis_.size() > 1)
            mag /= double(basis_.size());
        return mag.reshaped(reference_.grid.n_u, reference_.grid.n_v).array();
    }

    std::optional<double> CalibrationObjective::correlation(const ReflectionSet &gammas) const
    {
        const RealArray model = model_magnitude(gammas);
        if (use_shift_max_)
        {
            try
            {
                return pearson_max_shift(reference_.data, model, search_).rho;
            }
            catch (const NumericalError &)
            {
                return std::nullopt;
            }
        }
        const Eigen::VectorXd centered = model.reshaped().matrix().array() - model.mean();
        const double norm = centered.norm();
        if (!(norm > 0.0))
            return std::nullopt;
        return std::clamp(ref_centered_.dot(centered) / (ref_norm_ * norm), -1.0, 1.0);
    }

    double CalibrationObjective::operator()(const ReflectionSet &gammas) const
    {
        const auto rho = correlation(gammas);
        return rho ? -*rho : 1.0;
    }

    Eigen::VectorXd to_parameters(const ReflectionSet &gammas)
    {
        Eigen::VectorXd p(2 * Eigen::Index(wall_count));
        for (std::size_t i = 0; i < wall_count; ++i)
        {
            p(Eigen::Index(i)) = std::abs(gammas.gamma[i]);
            double ph = std::arg(gammas.gamma[i]);
            if (ph < 0.0)
                ph += two_pi;
            p(Eigen::Index(i + wall_count)) = ph;
        }
        return p;
    }

    ReflectionSet from_parameters(const Eigen::VectorXd &params)
    {
        if (params.size() != 2 * Eigen::Index(wall_count))
            throw ValidationError("expected 12 calibration parameters");
        ReflectionSet s;
        for (std::size_t i = 0; i < wall_count; ++i)
        {
            const double mag = std::clamp(params(Eigen::Index(i)), 0.0, 1.0);
            double ph = std::fmod(params(Eigen::Index(i + wall_count)), two_pi);
            if (ph < 0.0)
                ph += two_pi;
            s.gamma[i] = std::polar(mag, ph);
        }
        return s;
    }

    std::array<double, wall_count> wall_sensitivity(std::span<const FieldBasis> basis)
    {
        std::array<double, wall_count> out{};
        double direct = 0.0;
        for (const FieldBasis &b : basis)
        {
            direct += b.columns.col(0).cwiseAbs().mean();
            for (std::size_t i = 0; i < wall_count; ++i)
                out[i] += b.columns.col(Eigen::Index(i) + 1).cwiseAbs().mean();
        }
        for (double &s : out)
            s = direct > 0.0 ? s / direct : 0.0;
        return out;
    }

    std::vector<double> calibration_frequencies(const SceneConfig &scene, const RealMap &reference,
                                                const CalibrationConfig &cfg)
    {
        const auto &hz = scene.freqs.hz;
        if (cfg.average_frequencies)
            return hz;
        if (cfg.frequency_hz > 0.0)
            return {cfg.frequency_hz};
        if (reference.frequency_hz > 0.0 && std::find(hz.begin(), hz.end(), reference.frequency_hz) != hz.end())
            return {reference.frequency_hz};
        return {hz.front()};
    }

    CalibrationResult calibrate(const SceneConfig &scene, const RealMap &reference, const CalibrationConfig &cfg)
    {
        validate_scene(scene);
        validate_calibration_config(cfg);
        check_map(reference);
        if (!same_grid(reference.grid, GridShape::of(scene.grid)))
            throw ValidationError("reference map is not on the scene grid");

        std::vector<FieldBasis> basis;
        for (double f : calibration_frequencies(scene, reference, cfg))
            basis.push_back(field_basis(scene, f));
        const CalibrationObjective objective(reference, std::move(basis), cfg.use_shift_max, cfg.shift_search);

        const Eigen::Index n = 2 * Eigen::Index(wall_count);
        Eigen::VectorXd lower(n), upper(n), step(n);
        for (Eigen::Index i = 0; i < Eigen::Index(wall_count); ++i)
        {
            lower(i) = 0.0;
            upper(i) = 1.0;
            step(i) = 0.1;
            lower(i + Eigen::Index(wall_count)) = -std::numeric_limits<double>::infinity();
            upper(i + Eigen::Index(wall_count)) = std::numeric_limits<double>::infinity();
            step(i + Eigen::Index(wall_count)) = 0.6;
        }

        NelderMeadOptions opt;
        opt.max_evals = cfg.max_objective_evals;
        opt.f_tol = cfg.convergence_tol;

        CalibrationResult result;
        std::mt19937_64 rng(cfg.rng_seed);
        std::uniform_real_distribution<double> mag_dist(0.0, 0.5);
        std::uniform_real_distribution<double> phase_dist(0.0, 360.0);

        double best_rho = -std::numeric_limits<double>::infinity();
        Eigen::VectorXd best_x;
        for (int r = 0; r < cfg.restarts; ++r)
        {
            ReflectionSet init;
            if (r == 0)
                init = ReflectionSet::uniform(std::polar(cfg.init_magnitude, deg_to_rad(cfg.init_phase_deg)));
            else
                for (cdouble &g : init.gamma)
                {
                    const double mag = mag_dist(rng);
                    g = std::polar(mag, deg_to_rad(phase_dist(rng)));
                }

            RestartTrace trace;
            trace.initial = init;
            trace.initial_rho = -objective(init);

            int evals = 0;
            double running = std::numeric_limits<double>::infinity();
            auto f = [&](const Eigen::VectorXd &x) {
                const double v = objective(from_parameters(x));
                ++evals;
                if (cfg.record_trace && v < running)
                    result.trace.push_back({r, evals, -v});
                running = std::min(running, v);
                return v;
            };
            const NelderMeadResult nm = nelder_mead(f, to_parameters(init), step, lower, upper, opt);

            trace.final_rho = -nm.f;
            trace.evals = nm.evals;
            result.evals_used += nm.evals;
            if (trace.final_rho > best_rho)
            {
                best_rho = trace.final_rho;
                best_x = nm.x;
                result.restart_index_of_best = r;
            }
            result.restarts.push_back(trace);
        }

        result.gammas = from_parameters(best_x);
        const auto rho = objective.correlation(result.gammas);
        result.rho_achieved = rho ? *rho : -1.0;
        result.rho_initial = result.restarts.front().initial_rho;
        result.no_improvement = std::none_of(result.restarts.begin(), result.restarts.end(),
                                             [](const RestartTrace &t) { return t.final_rho > t.initial_rho; });
        result.sensitivity = wall_sensitivity(objective.basis());
        return result;
    }
}
