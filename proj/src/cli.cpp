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

#include "rssmap/cli.hpp"
#include "rssmap/calibrate.hpp"
#include "rssmap/error.hpp"
#include "rssmap/forward.hpp"
#include "rssmap/io.hpp"
#include "rssmap/mapops.hpp"
#include "rssmap/similarity.hpp"
#include "rssmap/synth.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace rssmap
{
    namespace
    {
        std::string fixed(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12f", v);
            return buf;
        }

        // out.map -> out_f00.map, out_f01.map, ...
        std::filesystem::path indexed_path(const std::filesystem::path &base, std::size_t index)
        {
            char tag[16];
            std::snprintf(tag, sizeof(tag), "_f%02zu", index);
            std::filesystem::path p = base;
            p.replace_filename(base.stem().string() + tag + base.extension().string());
            return p;
        }

        void emit_plot(const std::string &path, const RealMap &m)
        {
            if (path.empty())
                return;
            std::ostringstream s;
            write_plot_data(s, m);
            write_text_file(path, s.str());
        }

        RealMap db_of(const ComplexMap &m)
        {
            RealMap r = magnitude(m);
            r.data = 20.0 * r.data.max(1e-300).log10();
            r.unit = RealUnit::db;
            return r;
        }

        struct SimulateArgs
        {
            std::string scene, gammas, out, plot;
            double freq = 0.0;
        };

        int cmd_simulate(const SimulateArgs &a, std::ostream &out)
        {
            const SceneFile sf = read_scene(std::filesystem::path(a.scene));
            ReflectionSet gammas = ReflectionSet::zero();
            if (!a.gammas.empty())
                gammas = parse_reflections_arg(a.gammas);
            else if (sf.gammas)
                gammas = *sf.gammas;

            std::vector<ComplexMap> maps;
            if (a.freq > 0.0)
                maps.push_back(total_field_map(sf.scene, gammas, a.freq));
            else
                maps = sweep_maps(sf.scene, gammas);

            for (std::size_t i = 0; i < maps.size(); ++i)
            {
                const std::filesystem::path path = maps.size() == 1 ? std::filesystem::path(a.out) : indexed_path(a.out, i);
                write_map(path, maps[i]);
                out << "wrote " << path.string() << " (" << format_real(maps[i].frequency_hz) << " Hz)\n";
                if (!a.plot.empty())
                    emit_plot(maps.size() == 1 ? a.plot : indexed_path(a.plot, i).string(), db_of(maps[i]));
            }
            return exit_ok;
        }

        struct AttenuateArgs
        {
            std::string fp, tar, out, plot;
            double floor = default_noise_floor;
        };

        int cmd_attenuate(const AttenuateArgs &a, std::ostream &out, std::ostream &err)
        {
            const RealMap fp = as_magnitude(read_map(std::filesystem::path(a.fp)));
            const RealMap tar = as_magnitude(read_map(std::filesystem::path(a.tar)));
            const AttenuationMap att = attenuation_map(fp, tar, a.floor);
            write_map(std::filesystem::path(a.out), att.map);
            emit_plot(a.plot, att.map);
            const auto below = att.count(cell_below_floor), clamped = att.count(cell_clamped);
            if (below || clamped)
                err << "attenuate: " << below << " cells below floor, " << clamped << " cells clamped to +-"
                    << attenuation_limit_db << " dB\n";
            out << "wrote " << a.out << "\n";
            return exit_ok;
        }

        struct CorrelateArgs
        {
            std::string a, b;
            std::vector<Eigen::Index> max_shift;
            double min_overlap = 0.5;
        };

        int cmd_correlate(const CorrelateArgs &c, std::ostream &out)
        {
            const RealMap a = as_magnitude(read_map(std::filesystem::path(c.a)));
            const RealMap b = as_magnitude(read_map(std::filesystem::path(c.b)));
            const double rho = pearson(a, b);
            ShiftSearch search;
            search.min_overlap_fraction = c.min_overlap;
            if (c.max_shift.size() == 2)
            {
                search.max_shift_u = c.max_shift[0];
                search.max_shift_v = c.max_shift[1];
            }
            else
                search = clamp_search(search, a.grid.n_u, a.grid.n_v);
            const CorrelationResult best = pearson_max_shift(a, b, search);
            out << "rho=" << fixed(rho) << " rho_max=" << fixed(best.rho) << " shift=" << best.shift_u << ","
                << best.shift_v << " overlap=" << best.overlap_cells << "\n";
            return exit_ok;
        }

        struct CalibrateArgs
        {
            std::string scene, reference, out, trace;
            CalibrationConfig cfg;
            std::vector<Eigen::Index> max_shift;
        };

        int cmd_calibrate(CalibrateArgs a, std::ostream &out, std::ostream &err)
        {
            const SceneFile sf = read_scene(std::filesystem::path(a.scene));
            const RealMap reference = as_magnitude(read_map(std::filesystem::path(a.reference)));
            if (a.max_shift.size() == 2)
            {
                a.cfg.shift_search.max_shift_u = a.max_shift[0];
                a.cfg.shift_search.max_shift_v = a.max_shift[1];
            }
            else
                a.cfg.shift_search = clamp_search(a.cfg.shift_search, reference.grid.n_u, reference.grid.n_v);
            a.cfg.record_trace = !a.trace.empty();

            const CalibrationResult r = calibrate(sf.scene, reference, a.cfg);
            std::ostringstream report;
            write_report(report, r, a.cfg);
            write_text_file(a.out, report.str());
            if (!a.trace.empty())
            {
                std::ostringstream t;
                write_trace_csv(t, r);
                write_text_file(a.trace, t.str());
            }
            if (r.no_improvement)
                err << "calibrate: warning: no restart improved on its starting point\n";
            out << "rho=" << fixed(r.rho_achieved) << " initial=" << fixed(r.rho_initial) << " evals=" << r.evals_used
                << "\n";
            return exit_ok;
        }

        struct SynthArgs
        {
            std::string scene, gammas_true, out, sidecar;
            double noise_db = 0.0;
            double freq = 0.0;
            bool avg = false;
            std::vector<Eigen::Index> shift;
            std::uint64_t seed = 0;
        };

        int cmd_synth(const SynthArgs &a, std::ostream &out)
        {
            SynthSpec spec;
            spec.scene = read_scene(std::filesystem::path(a.scene)).scene;
            spec.gammas_true = parse_reflections_arg(a.gammas_true);
            spec.noise_sigma_db = a.noise_db;
            if (a.shift.size() == 2)
            {
                spec.shift_u = a.shift[0];
                spec.shift_v = a.shift[1];
            }
            spec.rng_seed = a.seed;
            spec.frequency_hz = a.freq;
            spec.average_frequencies = a.avg;

            const SynthOutput s = synth_reference(spec);
            write_map(std::filesystem::path(a.out), s.map);
            const std::string sidecar = a.sidecar.empty() ? a.out + ".truth" : a.sidecar;
            std::ostringstream t;
            write_truth(t, s.truth);
            write_text_file(sidecar, t.str());
            out << "wrote " << a.out << " and " << sidecar << "\n";
            return exit_ok;
        }

        struct AverageArgs
        {
            std::vector<std::string> in;
            std::string out;
            bool complex = false;
        };

        int cmd_freq_average(const AverageArgs &a, std::ostream &out)
        {
            std::vector<ComplexMap> maps;
            for (const std::string &p : a.in)
            {
                AnyMap m = read_map(std::filesystem::path(p));
                if (!std::holds_alternative<ComplexMap>(m))
                    throw ValidationError("freq-average needs complex maps, '" + p + "' is real");
                maps.push_back(std::get<ComplexMap>(std::move(m)));
            }
            const RealMap avg = freq_average(maps, a.complex ? AverageMode::complex : AverageMode::magnitude);
            write_map(std::filesystem::path(a.out), avg);
            out << "wrote " << a.out << "\n";
            return exit_ok;
        }

        struct ExampleArgs
        {
            std::string out;
            bool band = false;
            Eigen::Index decimate = 1;
            std::string gammas;
        };

        int cmd_example_scene(const ExampleArgs &a, std::ostream &out)
        {
            SceneConfig s = decimate_grid(bundled_scene(), a.decimate);
            if (a.band)
                s.freqs = bundled_band();
            std::optional<ReflectionSet> g;
            if (a.gammas == "concrete")
                g = concrete_reflections();
            else if (a.gammas == "optimized")
                g = fitted_reflections();
            else if (!a.gammas.empty())
                g = parse_reflections_arg(a.gammas);
            std::ostringstream text;
            write_scene(text, s, g ? &*g : nullptr);
            if (a.out.empty())
                out << text.str();
            else
                write_text_file(a.out, text.str());
            return exit_ok;
        }
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Indoor RSS map simulation, correlation and reflection-coefficient calibration", "rssmap"};
        app.require_subcommand(1);

        SimulateArgs sim;
        auto *simulate = app.add_subcommand("simulate", "Image-source E_z map(s) on the scene grid");
        simulate->add_option("--scene", sim.scene, "Scene configuration file")->required();
        simulate->add_option("--gammas", sim.gammas, "Gamma file or inline 'mag@deg' (one or six, comma-separated)");
        simulate->add_option("--freq", sim.freq, "Single frequency in Hz (default: every scene frequency)");
        simulate->add_option("--out", sim.out, "Output map file")->required();
        simulate->add_option("--emit-plot-data", sim.plot, "Also write 'x y dB' triplets for gnuplot");

        AttenuateArgs att;
        auto *attenuate = app.add_subcommand("attenuate", "Attenuation map 20 log10(|fp| / |tar|) in dB");
        attenuate->add_option("--fp", att.fp, "Empty-room map")->required();
        attenuate->add_option("--tar", att.tar, "Target-present map")->required();
        attenuate->add_option("--out", att.out, "Output map file")->required();
        attenuate->add_option("--floor", att.floor, "Noise floor (linear)")->check(CLI::NonNegativeNumber);
        attenuate->add_option("--emit-plot-data", att.plot, "Also write 'x y dB' triplets for gnuplot");

        CorrelateArgs cor;
        auto *correlate = app.add_subcommand("correlate", "Pearson correlation and its shift maximum");
        correlate->add_option("--a", cor.a, "First map")->required();
        correlate->add_option("--b", cor.b, "Second map")->required();
        correlate->add_option("--max-shift", cor.max_shift, "Search radius U V in pixels (default 5 5)")->expected(2);
        correlate->add_option("--min-overlap", cor.min_overlap, "Minimum overlap fraction");

        CalibrateArgs cal;
        auto *calib = app.add_subcommand("calibrate", "Fit the six wall reflection coefficients to a reference map");
        calib->add_option("--scene", cal.scene, "Scene configuration file")->required();
        calib->add_option("--reference", cal.reference, "Reference map (complex or magnitude)")->required();
        calib->add_option("--out", cal.out, "Calibration report file")->required();
        calib->add_option("--trace", cal.trace, "CSV trace of improvements (restart,eval,rho)");
        calib->add_flag("--avg-freqs", cal.cfg.average_frequencies, "Correlate frequency-averaged magnitudes");
        calib->add_option("--restarts", cal.cfg.restarts, "Number of starts")->check(CLI::PositiveNumber);
        calib->add_option("--seed", cal.cfg.rng_seed, "Seed for random restarts");
        calib->add_option("--init-mag", cal.cfg.init_magnitude, "Initial |Gamma| of the first start");
        calib->add_option("--init-phase", cal.cfg.init_phase_deg, "Initial phase of the first start (degrees)");
        calib->add_option("--max-evals", cal.cfg.max_objective_evals, "Objective evaluations per start");
        calib->add_option("--tol", cal.cfg.convergence_tol, "Convergence tolerance on the objective");
        calib->add_option("--freq", cal.cfg.frequency_hz, "Working frequency in Hz");
        calib->add_flag("--shift-max", cal.cfg.use_shift_max, "Maximize rho over pixel shifts");
        calib->add_option("--max-shift", cal.max_shift, "Shift radius U V for --shift-max")->expected(2);

        SynthArgs syn;
        auto *synth = app.add_subcommand("synth", "Synthetic reference map from known coefficients");
        synth->add_option("--scene", syn.scene, "Scene configuration file")->required();
        synth->add_option("--gammas-true", syn.gammas_true, "Ground-truth gamma file or inline values")->required();
        synth->add_option("--noise-db", syn.noise_db, "Log-normal noise sigma in dB")->check(CLI::NonNegativeNumber);
        synth->add_option("--shift", syn.shift, "Pixel shift U V")->expected(2);
        synth->add_option("--seed", syn.seed, "Noise seed");
        synth->add_option("--freq", syn.freq, "Frequency in Hz (default: first scene frequency)");
        synth->add_flag("--avg-freqs", syn.avg, "Average magnitudes over every scene frequency");
        synth->add_option("--out", syn.out, "Output map file")->required();
        synth->add_option("--sidecar", syn.sidecar, "Ground-truth file (default: <out>.truth)");

        AverageArgs avg;
        auto *average = app.add_subcommand("freq-average", "Mean magnitude over several complex maps");
        average->add_option("--in", avg.in, "Input complex maps")->required()->expected(1, -1);
        average->add_option("--out", avg.out, "Output map file")->required();
        average->add_flag("--complex", avg.complex, "Average complex values before taking the modulus");

        ExampleArgs ex;
        auto *example = app.add_subcommand("example-scene", "Write the bundled measurement-room scene");
        example->add_option("--out", ex.out, "Output file (default: stdout)");
        example->add_flag("--band", ex.band, "Use the 2.40-2.50 GHz band (11 frequencies)");
        example->add_option("--decimate", ex.decimate, "Keep every n-th grid sample")->check(CLI::PositiveNumber);
        example->add_option("--gammas", ex.gammas, "'concrete', 'optimized', or gamma values to embed");

        std::vector<const char *> argv;
        argv.push_back("rssmap");
        for (const std::string &a : args)
            argv.push_back(a.c_str());
        try
        {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try
        {
            if (*simulate)
                return cmd_simulate(sim, out);
            if (*attenuate)
                return cmd_attenuate(att, out, err);
            if (*correlate)
                return cmd_correlate(cor, out);
            if (*calib)
                return cmd_calibrate(cal, out, err);
            if (*synth)
                return cmd_synth(syn, out);
            if (*average)
                return cmd_freq_average(avg, out);
            if (*example)
                return cmd_example_scene(ex, out);
        }
        catch (const NumericalError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_numerical;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_data;
        }
        return exit_usage;
    }

    int run_cli(int argc, char **argv)
    {
        std::vector<std::string> args(argv + 1, argv + argc);
        return run_cli(args, std::cout, std::cerr);
    }
}
