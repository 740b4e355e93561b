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

#include "rssmap/error.hpp"
#include "rssmap/similarity.hpp"

#include <random>

using namespace rssmap;
using Catch::Matchers::WithinAbs;

namespace
{
    RealArray random_map(std::mt19937_64 &rng, Eigen::Index r, Eigen::Index c)
    {
        std::normal_distribution<double> n(0.0, 1.0);
        RealArray a(r, c);
        for (Eigen::Index i = 0; i < a.size(); ++i)
            a(i) = n(rng);
        return a;
    }

    RealMap as_map(const RealArray &a)
    {
        RealMap m;
        m.data = a;
        m.grid = {a.rows(), a.cols(), 0.031, 0.031};
        m.unit = RealUnit::db; // allows negative samples
        return m;
    }

    // Plain loops over the overlap, written independently of the library.
    struct Brute
    {
        double rho;
        int du, dv;
    };

    Brute brute_force(const RealArray &a, const RealArray &b, int ru, int rv, double min_frac)
    {
        const int nu = int(a.rows()), nv = int(a.cols());
        Brute best{-2.0, 0, 0};
        for (int du = -ru; du <= ru; ++du)
            for (int dv = -rv; dv <= rv; ++dv)
            {
                std::vector<double> xs, ys;
                for (int i = 0; i < nu; ++i)
                    for (int j = 0; j < nv; ++j)
                    {
                        const int bi = i - du, bj = j - dv;
                        if (bi < 0 || bj < 0 || bi >= nu || bj >= nv)
                            continue;
                        xs.push_back(a(i, j));
                        ys.push_back(b(bi, bj));
                    }
                if (double(xs.size()) < min_frac * nu * nv)
                    continue;
                double mx = 0, my = 0;
                for (std::size_t k = 0; k < xs.size(); ++k)
                    mx += xs[k], my += ys[k];
                mx /= double(xs.size());
                my /= double(ys.size());
                double sxy = 0, sxx = 0, syy = 0;
                for (std::size_t k = 0; k < xs.size(); ++k)
                {
                    sxy += (xs[k] - mx) * (ys[k] - my);
                    sxx += (xs[k] - mx) * (xs[k] - mx);
                    syy += (ys[k] - my) * (ys[k] - my);
                }
                const double rho = sxy / std::sqrt(sxx * syy);
                if (rho > best.rho)
                    best = {rho, du, dv};
            }
        return best;
    }
}

TEST_CASE("Similarity - pearson spot values")
{
    RealArray a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 1, 2, 4, 3;
    CHECK_THAT(pearson(a, b), WithinAbs(0.8, 1e-15));
    CHECK(pearson(a, a) == 1.0);
    CHECK(pearson(a, RealArray(-a)) == -1.0);
    CHECK_THROWS_AS(pearson(a, RealArray::Constant(2, 2, 3.0)), NumericalError);
    CHECK_THROWS_AS(pearson(a, RealArray::Ones(3, 2)), ValidationError);
}

TEST_CASE("Similarity - symmetry and affine invariance")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.01, 50.0), off(-100.0, 100.0);
    for (int n = 0; n < 50; ++n)
    {
        const RealArray a = random_map(rng, 13, 7), b = random_map(rng, 13, 7);
        const double rho = pearson(a, b);
        CHECK(pearson(b, a) == rho);
        const double s = u(rng), t = off(rng);
        CHECK_THAT(pearson(a, RealArray(s * b + t)), WithinAbs(rho, 1e-12));
        CHECK_THAT(pearson(a, RealArray(-s * b + t)), WithinAbs(-rho, 1e-12));
        CHECK(std::abs(rho) <= 1.0);
    }
}

TEST_CASE("Similarity - planted shift recovered exactly")
{
    std::mt19937_64 rng(21);
    const ShiftSearch search{3, 3, 0.5};
    for (int du = -3; du <= 3; ++du)
        for (int dv = -3; dv <= 3; ++dv)
        {
            // Crop two windows of one larger field so b is a genuine translate
            // of a: b(i, j) = a(i - du, j - dv).
            const RealArray big = random_map(rng, 30, 26);
            const RealArray a = big.block(3, 3, 24, 20);
            const RealArray b = big.block(3 - du, 3 - dv, 24, 20);
            const CorrelationResult r = pearson_max_shift(a, b, search);
            CHECK(r.shift_u == -du);
            CHECK(r.shift_v == -dv);
            CHECK_THAT(r.rho, WithinAbs(1.0, 1e-9));
            CHECK(r.overlap_cells == (24 - std::abs(du)) * (20 - std::abs(dv)));
        }
}

TEST_CASE("Similarity - one-pixel example and identical maps")
{
    std::mt19937_64 rng(1);
    const RealArray big = random_map(rng, 12, 10);
    const RealArray a = big.block(1, 0, 11, 10);
    const RealArray b = big.block(0, 0, 11, 10); // b moved by +1 in u
    const CorrelationResult r = pearson_max_shift(a, b, {2, 2, 0.5});
    // a(i) pairs with b(i - du) = big(i - du); a(i) = big(i + 1) -> du = -1.
    CHECK(r.shift_u == -1);
    CHECK(r.shift_v == 0);
    CHECK_THAT(r.rho, WithinAbs(1.0, 1e-12));

    const CorrelationResult same = pearson_max_shift(a, a, {4, 4, 0.5});
    CHECK(same.rho == 1.0);
    CHECK(same.shift_u == 0);
    CHECK(same.shift_v == 0);
}

TEST_CASE("Similarity - zero radius equals plain pearson, and rho_max >= rho")
{
    std::mt19937_64 rng(5);
    for (int n = 0; n < 30; ++n)
    {
        const RealArray a = random_map(rng, 10, 8), b = random_map(rng, 10, 8);
        const double rho = pearson(a, b);
        const CorrelationResult zero = pearson_max_shift(a, b, {0, 0, 0.5});
        CHECK(zero.rho == rho);
        CHECK(zero.overlap_cells == 80);
        CHECK(pearson_max_shift(a, b, {3, 2, 0.5}).rho >= rho);
    }
}

TEST_CASE("Similarity - exhaustive search equivalence on small grids")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim(4, 16), rad(0, 3);
    for (int n = 0; n < 60; ++n)
    {
        const int nu = dim(rng), nv = dim(rng);
        const int ru = std::min(rad(rng), nu - 1), rv = std::min(rad(rng), nv - 1);
        const RealArray a = random_map(rng, nu, nv), b = random_map(rng, nu, nv);
        const Brute want = brute_force(a, b, ru, rv, 0.3);
        const CorrelationResult got = pearson_max_shift(a, b, {ru, rv, 0.3});
        CHECK(got.shift_u == want.du);
        CHECK(got.shift_v == want.dv);
        CHECK_THAT(got.rho, WithinAbs(want.rho, 1e-12));
    }
}

TEST_CASE("Similarity - ties prefer the smallest shift")
{
    // Periodic in u with period 2: shifts 0 and +-2 all correlate perfectly.
    RealArray a(8, 3);
    for (Eigen::Index i = 0; i < 8; ++i)
        for (Eigen::Index j = 0; j < 3; ++j)
            a(i, j) = double(i % 2) + 0.5 * double(j);
    const CorrelationResult r = pearson_max_shift(a, a, {2, 0, 0.5});
    CHECK(r.rho == 1.0);
    CHECK(r.shift_u == 0);

    // Anti-phase copy: du = -1 and du = +1 both match.
    RealArray b(8, 1);
    b << 0, 1, 0, 1, 0, 1, 0, 1;
    RealArray c(8, 1);
    c << 1, 0, 1, 0, 1, 0, 1, 0;
    const CorrelationResult t = pearson_max_shift(b, c, {1, 0, 0.5});
    CHECK(t.rho == 1.0);
    CHECK(t.shift_u == -1); // -1 and +1 tie; smaller du wins
}

TEST_CASE("Similarity - search validation")
{
    std::mt19937_64 rng(3);
    const RealArray a = random_map(rng, 4, 3);
    CHECK_THROWS_AS(pearson_max_shift(a, a, {4, 0, 0.5}), ValidationError);
    CHECK_THROWS_AS(pearson_max_shift(a, a, {0, 3, 0.5}), ValidationError);
    CHECK_THROWS_AS(pearson_max_shift(a, a, {1, 1, 0.0}), ValidationError);
    CHECK_THROWS_AS(pearson_max_shift(a, a, {-1, 1, 0.5}), ValidationError);
    CHECK_THROWS_AS(pearson_max_shift(a, RealArray(random_map(rng, 3, 4)), {1, 1, 0.5}), ValidationError);

    const ShiftSearch c = clamp_search({5, 5, 0.5}, 4, 3);
    CHECK(c.max_shift_u == 3);
    CHECK(c.max_shift_v == 2);

    // Every admissible overlap constant -> error.
    CHECK_THROWS_AS(pearson_max_shift(RealArray::Ones(4, 3), a, {1, 1, 0.5}), NumericalError);
}

TEST_CASE("Similarity - RealMap overloads")
{
    std::mt19937_64 rng(8);
    const RealArray a = random_map(rng, 6, 5), b = random_map(rng, 6, 5);
    CHECK(pearson(as_map(a), as_map(b)) == pearson(a, b));
    CHECK(pearson_max_shift(as_map(a), as_map(b), {1, 1, 0.5}).rho == pearson_max_shift(a, b, {1, 1, 0.5}).rho);
}
