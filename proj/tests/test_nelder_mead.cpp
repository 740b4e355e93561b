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

#include "rssmap/nelder_mead.hpp"

#include <cmath>

using namespace rssmap;
using Catch::Matchers::WithinAbs;

namespace
{
    const double inf = std::numeric_limits<double>::infinity();

    Eigen::VectorXd vec(std::initializer_list<double> v)
    {
        Eigen::VectorXd x(Eigen::Index(v.size()));
        Eigen::Index i = 0;
        for (double d : v)
            x(i++) = d;
        return x;
    }
}

TEST_CASE("NelderMead - Rosenbrock")
{
    auto rosen = [](const Eigen::VectorXd &x) {
        return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
    };
    NelderMeadOptions opt;
    opt.f_tol = 1e-14;
    opt.x_tol = 1e-10;
    const auto r = nelder_mead(rosen, vec({-1.2, 1.0}), vec({0.5, 0.5}), vec({-inf, -inf}), vec({inf, inf}), opt);
    CHECK(r.converged);
    CHECK_THAT(r.x(0), WithinAbs(1.0, 1e-5));
    CHECK_THAT(r.x(1), WithinAbs(1.0, 1e-5));
}

TEST_CASE("NelderMead - bounded optimum lands on the box")
{
    // Unconstrained minimum at (2, -3); box [0,1] x [-1,1].
    auto quad = [](const Eigen::VectorXd &x) { return std::pow(x(0) - 2.0, 2) + std::pow(x(1) + 3.0, 2); };
    int evals = 0;
    auto counted = [&](const Eigen::VectorXd &x) {
        ++evals;
        CHECK(x(0) >= 0.0);
        CHECK(x(0) <= 1.0);
        CHECK(x(1) >= -1.0);
        CHECK(x(1) <= 1.0);
        return quad(x);
    };
    const auto r = nelder_mead(counted, vec({0.5, 0.5}), vec({0.2, 0.2}), vec({0.0, -1.0}), vec({1.0, 1.0}));
    CHECK_THAT(r.x(0), WithinAbs(1.0, 1e-6));
    CHECK_THAT(r.x(1), WithinAbs(-1.0, 1e-6));
    CHECK(r.evals == evals);
}

TEST_CASE("NelderMead - budget and monotonicity")
{
    auto sphere = [](const Eigen::VectorXd &x) { return x.squaredNorm(); };
    const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(12, 0.7);
    NelderMeadOptions opt;
    opt.max_evals = 50;
    const auto r = nelder_mead(sphere, x0, Eigen::VectorXd::Constant(12, 0.1),
                               Eigen::VectorXd::Constant(12, -inf), Eigen::VectorXd::Constant(12, inf), opt);
    CHECK(r.evals <= 50);
    CHECK(r.f <= sphere(x0));
    CHECK(r.f == sphere(r.x));
}

TEST_CASE("NelderMead - start point outside the box is projected")
{
    auto f = [](const Eigen::VectorXd &x) { return std::abs(x(0) - 0.25); };
    const auto r = nelder_mead(f, vec({5.0}), vec({0.1}), vec({0.0}), vec({1.0}));
    CHECK_THAT(r.x(0), WithinAbs(0.25, 1e-6));
}

TEST_CASE("NelderMead - deterministic")
{
    auto f = [](const Eigen::VectorXd &x) { return std::sin(3.0 * x(0)) + std::cos(2.0 * x(1)) + 0.1 * x.squaredNorm(); };
    const auto a = nelder_mead(f, vec({0.3, -0.2}), vec({0.4, 0.4}), vec({-inf, -inf}), vec({inf, inf}));
    const auto b = nelder_mead(f, vec({0.3, -0.2}), vec({0.4, 0.4}), vec({-inf, -inf}), vec({inf, inf}));
    CHECK(a.x == b.x);
    CHECK(a.f == b.f);
    CHECK(a.evals == b.evals);
}
