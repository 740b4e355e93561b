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

#include "rssmap/io.hpp"
#include "rssmap/error.hpp"
#include "rssmap/mapops.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rssmap
{
    namespace
    {
        std::ifstream open_input(const std::filesystem::path &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw ValidationError("cannot open '" + path.string() + "'");
            return in;
        }

        bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

        std::vector<std::string_view> split_commas(std::string_view s)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto c = s.find(',');
                out.push_back(s.substr(0, c));
                if (c == std::string_view::npos)
                    break;
                s.remove_prefix(c + 1);
            }
            return out;
        }

        // Collects gamma.<wall> keys; returns nullopt when none are present.
        std::optional<ReflectionSet> gammas_from(const std::vector<KeyValue> &kvs)
        {
            ReflectionSet s;
            std::array<bool, wall_count> have{};
            std::size_t count = 0, last_line = 0;
            for (const KeyValue &kv : kvs)
            {
                if (!starts_with(kv.key, "gamma."))
                    continue;
                WallId w;
                try
                {
                    w = wall_from_name(std::string_view(kv.key).substr(6));
                }
                catch (const ValidationError &)
                {
                    throw FormatError("unknown key '" + kv.key + "'", kv.line);
                }
                const cdouble g = parse_polar(kv.value, kv.line);
                if (std::abs(g) > 1.0 + 1e-12)
                    throw FormatError(kv.key + " magnitude must be in [0, 1]", kv.line);
                s[w] = g;
                have[static_cast<std::size_t>(w)] = true;
                ++count;
                last_line = kv.line;
            }
            if (count == 0)
                return std::nullopt;
            for (std::size_t i = 0; i < wall_count; ++i)
                if (!have[i])
                    throw FormatError("missing key 'gamma." + std::string(wall_name(all_walls[i])) + "'", last_line);
            return s;
        }

        std::string format_complex_list(const ReflectionSet &s)
        {
            std::string out;
            for (std::size_t i = 0; i < wall_count; ++i)
                out += (i ? ", " : "") + format_polar(s.gamma[i]);
            return out;
        }
    }

    // ---- scene ---------------------------------------------------------------

    SceneFile read_scene(std::istream &in)
    {
        const auto kvs = parse_key_values(in);
        std::map<std::string, const KeyValue *, std::less<>> by_key;
        for (const KeyValue &kv : kvs)
        {
            static const std::set<std::string_view> known = {
                "room.size_x", "room.size_y", "room.size_z", "tx.pos",      "tx.moment",   "grid.origin", "grid.u_axis",
                "grid.v_axis", "grid.n_u",    "grid.n_v",    "grid.step_u", "grid.step_v", "freqs.list"};
            if (!known.contains(kv.key) && !starts_with(kv.key, "gamma."))
                throw FormatError("unknown key '" + kv.key + "'", kv.line);
            by_key[kv.key] = &kv;
        }
        auto need = [&](std::string_view key) -> const KeyValue & {
            const auto it = by_key.find(key);
            if (it == by_key.end())
                throw FormatError("missing key '" + std::string(key) + "'", 0);
            return *it->second;
        };
        auto real = [&](std::string_view key) {
            const KeyValue &kv = need(key);
            return parse_real(kv.value, kv.line);
        };
        auto point = [&](std::string_view key) {
            const KeyValue &kv = need(key);
            return parse_point(kv.value, kv.line);
        };
        auto count = [&](std::string_view key) {
            const KeyValue &kv = need(key);
            return Eigen::Index(parse_integer(kv.value, kv.line));
        };

        SceneFile out;
        SceneConfig &s = out.scene;
        s.room = {real("room.size_x"), real("room.size_y"), real("room.size_z")};
        s.tx.position = point("tx.pos");
        if (by_key.contains("tx.moment"))
            s.tx.dipole_moment = parse_polar(need("tx.moment").value, need("tx.moment").line);
        s.grid.origin = point("grid.origin");
        if (by_key.contains("grid.u_axis"))
            s.grid.u_axis = point("grid.u_axis");
        if (by_key.contains("grid.v_axis"))
            s.grid.v_axis = point("grid.v_axis");
        s.grid.n_u = count("grid.n_u");
        s.grid.n_v = count("grid.n_v");
        s.grid.step_u = real("grid.step_u");
        s.grid.step_v = real("grid.step_v");
        const KeyValue &fl = need("freqs.list");
        for (std::string_view f : split_commas(fl.value))
            s.freqs.hz.push_back(parse_real(f, fl.line));

        out.gammas = gammas_from(kvs);
        validate_scene(s);
        return out;
    }

    SceneFile read_scene(const std::filesystem::path &path)
    {
        auto in = open_input(path);
        return read_scene(in);
    }

    void write_scene(std::ostream &out, const SceneConfig &s, const ReflectionSet *gammas)
    {
        out << "# rssmap scene\n";
        out << "room.size_x = " << format_real(s.room.size_x) << "\n";
        out << "room.size_y = " << format_real(s.room.size_y) << "\n";
        out << "room.size_z = " << format_real(s.room.size_z) << "\n";
        out << "tx.pos = " << format_point(s.tx.position) << "\n";
        out << "tx.moment = " << format_polar(s.tx.dipole_moment) << "\n";
        out << "grid.origin = " << format_point(s.grid.origin) << "\n";
        out << "grid.u_axis = " << format_point(s.grid.u_axis) << "\n";
        out << "grid.v_axis = " << format_point(s.grid.v_axis) << "\n";
        out << "grid.n_u = " << s.grid.n_u << "\n";
        out << "grid.n_v = " << s.grid.n_v << "\n";
        out << "grid.step_u = " << format_real(s.grid.step_u) << "\n";
        out << "grid.step_v = " << format_real(s.grid.step_v) << "\n";
        out << "freqs.list = ";
        for (std::size_t i = 0; i < s.freqs.hz.size(); ++i)
            out << (i ? ", " : "") << format_real(s.freqs.hz[i]);
        out << "\n";
        if (gammas)
            write_reflections(out, *gammas);
    }

    // ---- reflection sets -----------------------------------------------------

    ReflectionSet read_reflections(std::istream &in)
    {
        const auto g = gammas_from(parse_key_values(in));
        if (!g)
            throw FormatError("no gamma.* keys found", 0);
        return *g;
    }

    ReflectionSet read_reflections(const std::filesystem::path &path)
    {
        auto in = open_input(path);
        return read_reflections(in);
    }

    void write_reflections(std::ostream &out, const ReflectionSet &gammas)
    {
        for (std::size_t i = 0; i < wall_count; ++i)
            out << "gamma." << wall_name(all_walls[i]) << " = " << format_polar(gammas.gamma[i]) << "\n";
    }

    ReflectionSet parse_reflections_arg(const std::string &arg)
    {
        if (arg.find('@') == std::string::npos)
            return read_reflections(std::filesystem::path(arg));
        const auto parts = split_commas(arg);
        if (parts.size() == 1)
        {
            const cdouble g = parse_polar(parts[0], 0);
            ReflectionSet s = ReflectionSet::uniform(g);
            validate_reflections(s);
            return s;
        }
        if (parts.size() != wall_count)
            throw ValidationError("inline gammas need one value or six comma-separated values");
        ReflectionSet s;
        for (std::size_t i = 0; i < wall_count; ++i)
            s.gamma[i] = parse_polar(parts[i], 0);
        validate_reflections(s);
        return s;
    }

    // ---- maps ----------------------------------------------------------------

    AnyMap read_map(std::istream &in)
    {
        std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> header;
        std::string raw;
        std::size_t line = 0;
        bool in_data = false;
        while (std::getline(in, raw))
        {
            ++line;
            std::string_view s = raw;
            if (const auto hash = s.find('#'); hash != std::string_view::npos)
                s = s.substr(0, hash);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            if (s.empty())
                continue;
            if (s == "data")
            {
                in_data = true;
                break;
            }
            std::istringstream one{std::string(s)};
            const auto kv = parse_key_values(one);
            const KeyValue &e = kv.front();
            static const std::set<std::string_view> known = {"format_version", "kind",   "unit",         "n_u",
                                                             "n_v",            "step_u", "step_v", "frequency_hz",
                                                             "provenance"};
            if (!known.contains(e.key))
                throw FormatError("unknown header key '" + e.key + "'", line);
            if (!header.emplace(e.key, std::pair{e.value, line}).second)
                throw FormatError("duplicate header key '" + e.key + "'", line);
        }
        if (!in_data)
            throw FormatError("missing 'data' line", line);

        auto need = [&](std::string_view key) -> const std::pair<std::string, std::size_t> & {
            const auto it = header.find(key);
            if (it == header.end())
                throw FormatError("missing header key '" + std::string(key) + "'", line);
            return it->second;
        };
        const auto &ver = need("format_version");
        if (parse_integer(ver.first, ver.second) != map_format_version)
            throw FormatError("unknown format_version '" + ver.first + "'", ver.second);
        const auto &kind = need("kind");
        if (kind.first != "complex" && kind.first != "real")
            throw FormatError("kind must be 'complex' or 'real'", kind.second);
        const bool is_complex = kind.first == "complex";

        GridShape grid;
        grid.n_u = Eigen::Index(parse_integer(need("n_u").first, need("n_u").second));
        grid.n_v = Eigen::Index(parse_integer(need("n_v").first, need("n_v").second));
        grid.step_u = parse_real(need("step_u").first, need("step_u").second);
        grid.step_v = parse_real(need("step_v").first, need("step_v").second);
        if (grid.n_u < 1 || grid.n_v < 1)
            throw FormatError("n_u and n_v must be positive", need("n_u").second);
        const double freq = parse_real(need("frequency_hz").first, need("frequency_hz").second);
        Provenance prov;
        try
        {
            prov = provenance_from_string(need("provenance").first);
        }
        catch (const ValidationError &e)
        {
            throw FormatError(e.what(), need("provenance").second);
        }

        const Eigen::Index cells = grid.size();
        ComplexArray cdata;
        RealArray rdata;
        if (is_complex)
            cdata.resize(grid.n_u, grid.n_v);
        else
            rdata.resize(grid.n_u, grid.n_v);

        Eigen::Index got = 0;
        while (std::getline(in, raw))
        {
            ++line;
            std::string_view s = raw;
            if (!s.empty() && s.back() == '\r')
                s.remove_suffix(1);
            if (s.find_first_not_of(" \t") == std::string_view::npos)
                continue;
            if (got == cells)
                throw FormatError("dimension mismatch: more than " + std::to_string(cells) + " data lines", line);
            const Eigen::Index i = got % grid.n_u, j = got / grid.n_u;
            const auto b = s.find_first_not_of(" \t");
            s.remove_prefix(b);
            if (is_complex)
            {
                const auto sp = s.find_first_of(" \t");
                if (sp == std::string_view::npos)
                    throw FormatError("expected 're im'", line);
                cdata(i, j) = cdouble(parse_real(s.substr(0, sp), line), parse_real(s.substr(sp), line));
            }
            else
                rdata(i, j) = parse_real(s, line);
            ++got;
        }
        if (got != cells)
            throw FormatError("dimension mismatch: data block truncated, expected " + std::to_string(cells) +
                                  " lines, missing " + std::to_string(cells - got),
                              line + 1);

        try
        {
            if (is_complex)
            {
                ComplexMap m{std::move(cdata), grid, freq, complex_unit_from_string(need("unit").first), prov};
                check_map(m);
                return m;
            }
            RealMap m{std::move(rdata), grid, freq, real_unit_from_string(need("unit").first), prov};
            check_map(m);
            return m;
        }
        catch (const FormatError &)
        {
            throw;
        }
        catch (const ValidationError &e)
        {
            throw FormatError(e.what(), need("unit").second);
        }
    }

    AnyMap read_map(const std::filesystem::path &path)
    {
        auto in = open_input(path);
        return read_map(in);
    }

    namespace
    {
        void write_header(std::ostream &out, std::string_view kind, std::string_view unit, const GridShape &g,
                          double freq, Provenance prov)
        {
            out << "# rssmap map\n";
            out << "format_version = " << map_format_version << "\n";
            out << "kind = " << kind << "\n";
            out << "unit = " << unit << "\n";
            out << "n_u = " << g.n_u << "\n";
            out << "n_v = " << g.n_v << "\n";
            out << "step_u = " << format_real(g.step_u) << "\n";
            out << "step_v = " << format_real(g.step_v) << "\n";
            out << "frequency_hz = " << format_real(freq) << "\n";
            out << "provenance = " << to_string(prov) << "\n";
            out << "data\n";
        }
    }

    void write_map(std::ostream &out, const ComplexMap &m)
    {
        check_map(m);
        std::string body;
        write_header(out, "complex", to_string(m.unit), m.grid, m.frequency_hz, m.provenance);
        for (Eigen::Index j = 0; j < m.grid.n_v; ++j)
            for (Eigen::Index i = 0; i < m.grid.n_u; ++i)
            {
                body += format_real(m.data(i, j).real());
                body += ' ';
                body += format_real(m.data(i, j).imag());
                body += '\n';
            }
        out << body;
    }

    void write_map(std::ostream &out, const RealMap &m)
    {
        check_map(m);
        std::string body;
        write_header(out, "real", to_string(m.unit), m.grid, m.frequency_hz, m.provenance);
        for (Eigen::Index j = 0; j < m.grid.n_v; ++j)
            for (Eigen::Index i = 0; i < m.grid.n_u; ++i)
            {
                body += format_real(m.data(i, j));
                body += '\n';
            }
        out << body;
    }

    void write_map(const std::filesystem::path &path, const ComplexMap &m)
    {
        std::ostringstream s;
        write_map(s, m);
        write_text_file(path, s.str());
    }

    void write_map(const std::filesystem::path &path, const RealMap &m)
    {
        std::ostringstream s;
        write_map(s, m);
        write_text_file(path, s.str());
    }

    RealMap as_magnitude(const AnyMap &m)
    {
        if (const auto *c = std::get_if<ComplexMap>(&m))
            return magnitude(*c);
        return std::get<RealMap>(m);
    }

    void write_plot_data(std::ostream &out, const RealMap &m)
    {
        std::string body;
        for (Eigen::Index j = 0; j < m.grid.n_v; ++j)
        {
            if (j)
                body += '\n';
            for (Eigen::Index i = 0; i < m.grid.n_u; ++i)
            {
                body += format_real(double(i) * m.grid.step_u) + ' ' + format_real(double(j) * m.grid.step_v) + ' ' +
                        format_real(m.data(i, j)) + '\n';
            }
        }
        out << body;
    }

    // ---- report / trace / truth ---------------------------------------------

    void write_report(std::ostream &out, const CalibrationResult &r, const CalibrationConfig &cfg)
    {
        out << "# rssmap calibration report\n";
        out << "rho = " << format_real(r.rho_achieved) << "\n";
        out << "rho_initial = " << format_real(r.rho_initial) << "\n";
        out << "objective = " << (cfg.use_shift_max ? "pearson_max_shift" : "pearson") << "\n";
        out << "average_frequencies = " << (cfg.average_frequencies ? "true" : "false") << "\n";
        out << "evals_used = " << r.evals_used << "\n";
        out << "restarts = " << r.restarts.size() << "\n";
        out << "restart_best = " << r.restart_index_of_best << "\n";
        out << "seed = " << cfg.rng_seed << "\n";
        out << "warning = " << (r.no_improvement ? "no_improvement" : "none") << "\n";
        write_reflections(out, r.gammas);
        for (std::size_t i = 0; i < wall_count; ++i)
            out << "sensitivity." << wall_name(all_walls[i]) << " = " << format_real(r.sensitivity[i]) << "\n";
        for (std::size_t k = 0; k < r.restarts.size(); ++k)
        {
            const RestartTrace &t = r.restarts[k];
            out << "restart." << k << ".init = " << format_complex_list(t.initial) << "\n";
            out << "restart." << k << ".initial_rho = " << format_real(t.initial_rho) << "\n";
            out << "restart." << k << ".final_rho = " << format_real(t.final_rho) << "\n";
            out << "restart." << k << ".evals = " << t.evals << "\n";
        }
    }

    void write_trace_csv(std::ostream &out, const CalibrationResult &r)
    {
        out << "restart,eval,rho\n";
        for (const TracePoint &p : r.trace)
            out << p.restart << "," << p.eval << "," << format_real(p.rho) << "\n";
    }

    void write_truth(std::ostream &out, const SynthTruth &t)
    {
        out << "# rssmap synthetic ground truth\n";
        write_reflections(out, t.gammas_true);
        out << "noise_sigma_db = " << format_real(t.noise_sigma_db) << "\n";
        out << "shift_u = " << t.shift_u << "\n";
        out << "shift_v = " << t.shift_v << "\n";
        out << "seed = " << t.rng_seed << "\n";
        out << "frequency_hz = " << format_real(t.frequency_hz) << "\n";
    }

    SynthTruth read_truth(std::istream &in)
    {
        const auto kvs = parse_key_values(in);
        SynthTruth t;
        const auto g = gammas_from(kvs);
        if (!g)
            throw FormatError("no gamma.* keys found", 0);
        t.gammas_true = *g;
        for (const KeyValue &kv : kvs)
        {
            if (kv.key == "noise_sigma_db")
                t.noise_sigma_db = parse_real(kv.value, kv.line);
            else if (kv.key == "shift_u")
                t.shift_u = Eigen::Index(parse_integer(kv.value, kv.line));
            else if (kv.key == "shift_v")
                t.shift_v = Eigen::Index(parse_integer(kv.value, kv.line));
            else if (kv.key == "seed")
                t.rng_seed = std::uint64_t(parse_integer(kv.value, kv.line));
            else if (kv.key == "frequency_hz")
                t.frequency_hz = parse_real(kv.value, kv.line);
            else if (!starts_with(kv.key, "gamma."))
                throw FormatError("unknown key '" + kv.key + "'", kv.line);
        }
        return t;
    }

    void write_text_file(const std::filesystem::path &path, const std::string &contents)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ValidationError("cannot write '" + path.string() + "'");
        out.write(contents.data(), std::streamsize(contents.size()));
        if (!out)
            throw ValidationError("write failed for '" + path.string() + "'");
    }
}
