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

#ifndef rssmap_nelder_mead_H
#define rssmap_nelder_mead_H

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace rssmap
{
    struct NelderMeadOptions
    {
        int max_evals = 20000;
        double f_tol = 1e-6;  // absolute spread of simplex values
        double x_tol = 1e-7;  // largest vertex distance from the best vertex
        int max_rebuilds = 6; // fresh simplices around the incumbent after convergence
    };

    struct NelderMeadResult
    {
        Eigen::VectorXd x;
        double f = std::numeric_limits<double>::infinity();
        int evals = 0;
        bool converged = false;
    };

    // Box-bounded Nelder-Mead with dimension-adaptive coefficients. Trial points
    // are projected onto [lower, upper] before evaluation (use +-infinity for
    // unbounded coordinates). `step` sets the initial edge length per
    // coordinate. After the simplex collapses, it is rebuilt around the best
    // point and the search continues until a rebuild gains less than f_tol.
    //
    // The returned f is never worse than f(project(x0)).
    template <typename Objective>
    NelderMeadResult nelder_mead(Objective &&f, const Eigen::VectorXd &x0, const Eigen::VectorXd &step,
                                 const Eigen::VectorXd &lower, const Eigen::VectorXd &upper,
                                 const NelderMeadOptions &opt = {})
    {
        const Eigen::Index n = x0.size();
        const double dn = double(n);
        const double alpha = 1.0;
        const double gamma = 1.0 + 2.0 / dn;
        const double rho = 0.75 - 1.0 / (2.0 * dn);
        const double sigma = 1.0 - 1.0 / dn;

        NelderMeadResult res;
        auto project = [&](Eigen::VectorXd x) -> Eigen::VectorXd {
            return x.cwiseMax(lower).cwiseMin(upper);
        };
        auto eval = [&](const Eigen::VectorXd &x) {
            ++res.evals;
            const double v = f(x);
            if (v < res.f)
            {
                res.f = v;
                res.x = x;
            }
            return v;
        };
        auto budget_left = [&] { return res.evals < opt.max_evals; };

        std::vector<Eigen::VectorXd> simplex(std::size_t(n + 1));
        std::vector<double> fv(std::size_t(n + 1));
        std::vector<std::size_t> order(std::size_t(n + 1));

        auto build = [&](const Eigen::VectorXd &center, double f_center, const Eigen::VectorXd &edge) {
            simplex[0] = center;
            fv[0] = f_center;
            for (Eigen::Index i = 0; i < n; ++i)
            {
                Eigen::VectorXd v = center;
                v(i) += edge(i);
                v = project(v);
                if (v(i) == center(i))
                {
                    v(i) = center(i) - edge(i);
                    v = project(v);
                }
                simplex[std::size_t(i + 1)] = v;
                fv[std::size_t(i + 1)] = budget_left() ? eval(v) : std::numeric_limits<double>::infinity();
            }
        };

        const Eigen::VectorXd start = project(x0);
        res.x = start;
        double f_start = eval(start);
        build(start, f_start, step);

        Eigen::VectorXd edge = step;
        int rebuilds = 0;
        double f_at_rebuild = res.f;
        while (budget_left())
        {
            std::iota(order.begin(), order.end(), std::size_t(0));
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            const std::size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];

            double spread = fv[worst] - fv[best];
            double size = 0.0;
            for (std::size_t i = 0; i < simplex.size(); ++i)
                size = std::max(size, (simplex[i] - simplex[best]).cwiseAbs().maxCoeff());
            if (!(spread > opt.f_tol) || size <= opt.x_tol)
            {
                const double gain = f_at_rebuild - res.f;
                if (rebuilds >= opt.max_rebuilds || (rebuilds > 0 && gain < opt.f_tol))
                {
                    res.converged = true;
                    break;
                }
                ++rebuilds;
                f_at_rebuild = res.f;
                edge *= 0.5;
                build(res.x, res.f, edge);
                continue;
            }

            Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != worst)
                    centroid += simplex[i];
            centroid /= dn;

            const Eigen::VectorXd xr = project(centroid + alpha * (centroid - simplex[worst]));
            const double fr = eval(xr);
            if (fr < fv[best])
            {
                if (!budget_left())
                    break;
                const Eigen::VectorXd xe = project(centroid + gamma * (xr - centroid));
                const double fe = eval(xe);
                if (fe < fr)
                    simplex[worst] = xe, fv[worst] = fe;
                else
                    simplex[worst] = xr, fv[worst] = fr;
                continue;
            }
            if (fr < fv[second])
            {
                simplex[worst] = xr, fv[worst] = fr;
                continue;
            }
            if (!budget_left())
                break;
            const bool outside = fr < fv[worst];
            const Eigen::VectorXd xc = outside ? project(centroid + rho * (xr - centroid))
                                               : project(centroid - rho * (centroid - simplex[worst]));
            const double fc = eval(xc);
            if (fc < (outside ? fr : fv[worst]))
            {
                simplex[worst] = xc, fv[worst] = fc;
                continue;
            }
            // Shrink towards the best vertex.
            for (std::size_t i = 0; i < simplex.size() && budget_left(); ++i)
            {
                if (i == best)
                    continue;
                simplex[i] = project(simplex[best] + sigma * (simplex[i] - simplex[best]));
                fv[i] = eval(simplex[i]);
            }
        }
        return res;
    }
}

#endif
