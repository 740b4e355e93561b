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

#ifndef rssmap_io_H
#define rssmap_io_H

#include "rssmap/calibrate.hpp"
#include "rssmap/forward.hpp"
#include "rssmap/maps.hpp"
#include "rssmap/scene.hpp"
#include "rssmap/synth.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rssmap
{
    // ---- key = value text --------------------------------------------------
    //
    // One `key = value` per line, `#` starts a comment, blank lines ignored.
    // Keys are case-sensitive; duplicate keys are errors.

    struct KeyValue
    {
        std::string key;
        std::string value;
        std::size_t line = 0;
    };

    std::vector<KeyValue> parse_key_values(std::istream &in);

    double parse_real(std::string_view text, std::size_t line);
    long long parse_integer(std::string_view text, std::size_t line);
    Vec3d parse_point(std::string_view text, std::size_t line);
    cdouble parse_polar(std::string_view text, std::size_t line); // "magnitude@degrees"

    // Shortest text that parses back to the same double.
    std::string format_real(double v);
    std::string format_point(const Vec3d &p);
    std::string format_polar(cdouble z); // phase wrapped to [0, 360)

    // ---- scene configuration -----------------------------------------------
    //
    // Keys: room.size_x room.size_y room.size_z tx.pos tx.moment grid.origin
    // grid.u_axis grid.v_axis grid.n_u grid.n_v grid.step_u grid.step_v
    // freqs.list, optionally gamma.<wall>. tx.moment defaults to 1@0, the grid
    // axes to (1,0,0) and (0,0,1). Everything else is required.

    struct SceneFile
    {
        SceneConfig scene;
        std::optional<ReflectionSet> gammas; // present when all six gamma.* keys are
    };

    SceneFile read_scene(std::istream &in);
    SceneFile read_scene(const std::filesystem::path &path);
    void write_scene(std::ostream &out, const SceneConfig &scene, const ReflectionSet *gammas = nullptr);

    // Six gamma.<wall> entries. Keys outside the gamma.* namespace are skipped
    // so calibration reports and truth sidecars can be read back directly.
    ReflectionSet read_reflections(std::istream &in);
    ReflectionSet read_reflections(const std::filesystem::path &path);
    void write_reflections(std::ostream &out, const ReflectionSet &gammas);

    // Either a path to a gamma file or an inline list: one "mag@deg" applied to
    // every wall, or six comma-separated values in wall order.
    ReflectionSet parse_reflections_arg(const std::string &arg);

    // ---- map files ---------------------------------------------------------
    //
    //   # rssmap map
    //   format_version = 1
    //   kind = complex | real
    //   unit = volt_per_meter | dimensionless | linear | db | normalized
    //   n_u = .. / n_v = .. / step_u = .. / step_v = ..
    //   frequency_hz = ..
    //   provenance = simulated | measured | synthetic
    //   data
    //   <one cell per line, row-major: "re im" or "value">

    inline constexpr int map_format_version = 1;

    using AnyMap = std::variant<ComplexMap, RealMap>;

    AnyMap read_map(std::istream &in);
    AnyMap read_map(const std::filesystem::path &path);
    void write_map(std::ostream &out, const ComplexMap &m);
    void write_map(std::ostream &out, const RealMap &m);
    void write_map(const std::filesystem::path &path, const ComplexMap &m);
    void write_map(const std::filesystem::path &path, const RealMap &m);

    // Real maps pass through; complex maps become magnitudes.
    RealMap as_magnitude(const AnyMap &m);

    // gnuplot "x y value" triplets, x/y in meters along the grid axes, blank
    // line between v rows.
    void write_plot_data(std::ostream &out, const RealMap &m);

    // ---- calibration report, trace, truth sidecar --------------------------

    void write_report(std::ostream &out, const CalibrationResult &result, const CalibrationConfig &cfg);
    void write_trace_csv(std::ostream &out, const CalibrationResult &result);
    void write_truth(std::ostream &out, const SynthTruth &truth);
    SynthTruth read_truth(std::istream &in);

    // Writes via a temporary string so the file holds exactly the formatted bytes.
    void write_text_file(const std::filesystem::path &path, const std::string &contents);
}

#endif
