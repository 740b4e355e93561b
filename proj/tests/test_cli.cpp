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

#include "rssmap/cli.hpp"
#include "rssmap/io.hpp"
#include "rssmap/mapops.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rssmap;
using Catch::Matchers::ContainsSubstring;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    Run run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    struct TempDir
    {
        fs::path path;
        TempDir()
        {
            path = fs::temp_directory_path() / ("rssmap_cli_" + std::to_string(Catch::rngSeed()) + "_" +
                                                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
        std::string operator/(const std::string &name) const { return (path / name).string(); }
    };
}

TEST_CASE("CLI - example scene, simulate and self-correlation")
{
    TempDir t;
    REQUIRE(run({"example-scene", "--decimate", "4", "--gammas", "concrete", "--out", t / "scene.txt"}).code == 0);
    const SceneFile sf = read_scene(fs::path(t / "scene.txt"));
    CHECK(sf.scene.grid.n_u == 40);
    REQUIRE(sf.gammas.has_value());

    const Run sim = run({"simulate", "--scene", t / "scene.txt", "--out", t / "fp.map", "--emit-plot-data", t / "fp.dat"});
    REQUIRE(sim.code == 0);
    CHECK_THAT(sim.out, ContainsSubstring("wrote"));
    CHECK(fs::exists(t / "fp.dat"));

    // Library parity: the file holds exactly the library's map.
    const ComplexMap lib = total_field_map(sf.scene, *sf.gammas, 2.48e9);
    const AnyMap file = read_map(fs::path(t / "fp.map"));
    REQUIRE(std::holds_alternative<ComplexMap>(file));
    CHECK((std::get<ComplexMap>(file).data == lib.data).all());

    const Run self = run({"correlate", "--a", t / "fp.map", "--b", t / "fp.map"});
    CHECK(self.code == 0);
    CHECK(self.out == "rho=1.000000000000 rho_max=1.000000000000 shift=0,0 overlap=800\n");
}

TEST_CASE("CLI - simulate over a band writes one file per frequency")
{
    TempDir t;
    REQUIRE(run({"example-scene", "--decimate", "8", "--band", "--out", t / "scene.txt"}).code == 0);
    REQUIRE(run({"simulate", "--scene", t / "scene.txt", "--gammas", "optimized.txt", "--out", t / "m.map"}).code == 2);
    REQUIRE(run({"simulate", "--scene", t / "scene.txt", "--gammas", "0.203@-13.5", "--out", t / "m.map"}).code == 0);
    for (int i = 0; i < 11; ++i)
    {
        char name[32];
        std::snprintf(name, sizeof(name), "m_f%02d.map", i);
        CHECK(fs::exists(t / name));
    }

    const Run avg = run({"freq-average", "--in", t / "m_f00.map", t / "m_f05.map", t / "m_f10.map", "--out", t / "avg.map"});
    REQUIRE(avg.code == 0);
    std::vector<ComplexMap> maps;
    for (const char *n : {"m_f00.map", "m_f05.map", "m_f10.map"})
        maps.push_back(std::get<ComplexMap>(read_map(fs::path(t / n))));
    CHECK((as_magnitude(read_map(fs::path(t / "avg.map"))).data == freq_average(maps).data).all());

    REQUIRE(run({"freq-average", "--complex", "--in", t / "m_f00.map", t / "m_f10.map", "--out", t / "c.map"}).code == 0);
    maps.erase(maps.begin() + 1);
    CHECK((as_magnitude(read_map(fs::path(t / "c.map"))).data ==
           freq_average(maps, AverageMode::complex).data)
              .all());
}

TEST_CASE("CLI - attenuation of identical maps is zero")
{
    TempDir t;
    REQUIRE(run({"example-scene", "--decimate", "8", "--out", t / "scene.txt"}).code == 0);
    REQUIRE(run({"simulate", "--scene", t / "scene.txt", "--out", t / "fp.map"}).code == 0);
    const Run r = run({"attenuate", "--fp", t / "fp.map", "--tar", t / "fp.map", "--out", t / "att.map"});
    REQUIRE(r.code == 0);
    const RealMap att = as_magnitude(read_map(fs::path(t / "att.map")));
    CHECK(att.unit == RealUnit::db);
    CHECK((att.data == 0.0).all());
}

TEST_CASE("CLI - synth then calibrate recovers a high correlation")
{
    TempDir t;
    REQUIRE(run({"example-scene", "--decimate", "4", "--out", t / "scene.txt"}).code == 0);
    const Run s = run({"synth", "--scene", t / "scene.txt", "--gammas-true", "0.19@95,0.15@55,0.11@0,0.17@17,0.11@243,0.7@287",
                       "--seed", "5", "--out", t / "ref.map"});
    REQUIRE(s.code == 0);
    CHECK(fs::exists(t / "ref.map.truth"));
    std::ifstream truth(t / "ref.map.truth");
    CHECK(read_truth(truth).rng_seed == 5);
    CHECK_THAT(slurp(t / "ref.map"), !ContainsSubstring("gamma"));

    const std::vector<std::string> args = {"calibrate", "--scene",    t / "scene.txt", "--reference", t / "ref.map",
                                           "--out",     t / "r1.txt", "--restarts",    "2",           "--seed",
                                           "3",         "--trace",    t / "trace.csv"};
    const Run c = run(args);
    REQUIRE(c.code == 0);
    CHECK_THAT(c.out, ContainsSubstring("rho=0.99"));
    const std::string report = slurp(t / "r1.txt");
    CHECK_THAT(report, ContainsSubstring("seed = 3\n"));
    CHECK(slurp(t / "trace.csv").starts_with("restart,eval,rho\n"));

    // The report reads back as a gamma file.
    CHECK_NOTHROW(read_reflections(fs::path(t / "r1.txt")));

    std::vector<std::string> again = args;
    again[6] = t / "r2.txt";
    REQUIRE(run(again).code == 0);
    CHECK(slurp(t / "r1.txt") == slurp(t / "r2.txt"));
}

TEST_CASE("CLI - exit codes")
{
    TempDir t;
    CHECK(run({}).code == exit_usage);
    CHECK(run({"bogus"}).code == exit_usage);
    CHECK(run({"simulate", "--out", t / "x.map"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);

    const Run missing = run({"simulate", "--scene", t / "none.txt", "--out", t / "x.map"});
    CHECK(missing.code == exit_data);
    CHECK_THAT(missing.err, ContainsSubstring("cannot open"));

    {
        std::ofstream bad(t / "bad.txt");
        bad << "room.size_x = 5\nmystery = 1\n";
    }
    const Run unknown = run({"simulate", "--scene", t / "bad.txt", "--out", t / "x.map"});
    CHECK(unknown.code == exit_data);
    CHECK_THAT(unknown.err, ContainsSubstring("line 2"));

    RealMap flat;
    flat.data = RealArray::Constant(4, 3, 2.0);
    flat.grid = {4, 3, 0.1, 0.1};
    write_map(fs::path(t / "flat.map"), flat);
    const Run numerical = run({"correlate", "--a", t / "flat.map", "--b", t / "flat.map"});
    CHECK(numerical.code == exit_numerical);
    CHECK_THAT(numerical.err, ContainsSubstring("constant map"));
}
