// Copyright 2026 The steerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "steerqc/appendix_b.h"
#include "steerqc/config.h"
#include "steerqc/errors.h"
#include "steerqc/pca.h"
#include "steerqc/sweep.h"
#include "steerqc/sweep_csv.h"

namespace steerqc::cli {

namespace {

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    return f;
}

template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char *residue_name(ResidueScale s) {
    switch (s) {
        case ResidueScale::kAbsolute:
            return "absolute";
        case ResidueScale::kRelative:
            return "relative";
        case ResidueScale::kChiSquare:
            return "chi2";
    }
    return "?";
}

}  // namespace

int cmd_sweep(const SweepArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        SweepConfig config = load_sweep_config(args.config);
        if (args.seed) {
            config.base_seed = *args.seed;
        }
        std::string path = args.out.empty() ? config.output : args.out;
        auto progress = [&](const SweepRow &r) {
            if (!args.quiet) {
                err << r.model << " L=" << r.L << " p=" << r.p << " sigma1=" << r.stats.sigma1_mean
                    << " sigma2=" << r.stats.sigma2_mean << "\n";
            }
        };
        std::optional<std::ofstream> file;
        if (!path.empty()) {
            file = open_output(path);
        }
        std::vector<SweepRow> rows = run_sweep(config, args.threads, progress);
        write_sweep_csv(file ? *file : out, rows);
        if (file && !*file) {
            throw std::runtime_error("failed writing '" + path + "'");
        }
        return kExitOk;
    });
}

int cmd_collapse(const CollapseArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        std::ifstream in(args.input);
        if (!in) {
            throw std::runtime_error("cannot open '" + args.input + "'");
        }
        std::vector<SweepRow> rows = read_sweep_csv(in);
        std::vector<ScanPoint> points = filter_min_size(scan_points(rows), args.min_L);
        CollapseOptions opt;
        opt.degree = args.degree;
        opt.scale = args.residue;
        ScalingParams guess;
        if (args.guess) {
            guess = *args.guess;
        } else if (!points.empty()) {
            auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                                [](const ScanPoint &a, const ScanPoint &b) { return a.p < b.p; });
            guess.p_c = 0.5 * (lo->p + hi->p);
        }
        CollapseResult r;
        try {
            r = collapse(points, guess, opt);
        } catch (const std::exception &e) {
            throw std::runtime_error("collapse of '" + args.input + "' (" + std::to_string(points.size()) +
                                     " points) failed: " + e.what());
        }

        nlohmann::ordered_json record = {
            {"input", args.input},
            {"min_L", args.min_L},
            {"points", points.size()},
            {"degree", r.degree},
            {"residue", residue_name(r.scale)},
            {"p_c", r.p_c},
            {"p_c_err", r.p_c_err},
            {"nu", r.nu},
            {"nu_err", r.nu_err},
            {"alpha", r.alpha},
            {"eps_min", r.eps_min},
            {"converged", r.converged},
            {"errors_closed", r.errors_closed},
            {"evaluations", r.evaluations},
        };
        std::vector<MasterPoint> master = master_curve(points, {r.p_c, r.nu, r.alpha});
        auto write_master = [&](std::ostream &o) {
            o << "L,p,x,y\n";
            for (const MasterPoint &m : master) {
                o << m.L << ',' << fmt(m.p) << ',' << fmt(m.x) << ',' << fmt(m.y) << "\n";
            }
        };
        if (args.out.empty()) {
            out << record.dump(2) << "\n";
        } else {
            std::ofstream j = open_output(args.out + ".json");
            j << record.dump(2) << "\n";
            std::ofstream m = open_output(args.out + "_master.csv");
            write_master(m);
            err << "p_c=" << r.p_c << " +/- " << r.p_c_err << " nu=" << r.nu << " +/- " << r.nu_err << "\n";
        }
        return r.converged ? kExitOk : kExitRuntime;
    });
}

int cmd_pca_dump(const PcaDumpArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        SweepConfig config = load_sweep_config(args.config);
        if (args.seed) {
            config.base_seed = *args.seed;
        }
        size_t L = args.L.value_or(config.sizes.front());
        double p = args.p.value_or(config.grid.front());
        ModelSpec spec = config.spec_at(L, p);
        TrajectoryRunner runner(spec);
        SampleMatrix x = sample_batch(runner, config.base_seed, 0, config.M, args.threads);
        PcaSummary s = pca(x, std::min({args.components, x.samples(), x.features()}));

        out << "sigmas";
        for (double v : s.sigmas) {
            out << ',' << fmt(v);
        }
        out << "\n";
        if (args.out.empty()) {
            return kExitOk;
        }
        std::ofstream w = open_output(args.out + "_weights.csv");
        w << "site";
        for (Eigen::Index a = 0; a < s.weighting_vectors.cols(); a++) {
            w << ",v" << a + 1;
        }
        w << "\n";
        for (Eigen::Index i = 0; i < s.weighting_vectors.rows(); i++) {
            w << i + 1;
            for (Eigen::Index a = 0; a < s.weighting_vectors.cols(); a++) {
                w << ',' << fmt(s.weighting_vectors(i, a));
            }
            w << "\n";
        }
        std::ofstream pr = open_output(args.out + "_projections.csv");
        pr << "sample,proj1,proj2\n";
        for (Eigen::Index i = 0; i < s.projections.rows(); i++) {
            pr << i << ',' << fmt(s.projections(i, 0)) << ',' << fmt(s.projections(i, 1)) << "\n";
        }
        err << "wrote " << args.out << "_weights.csv and " << args.out << "_projections.csv\n";
        return kExitOk;
    });
}

int cmd_verify_appendix_b(uint64_t seed, std::ostream &out) {
    AppendixBReport report = verify_appendix_b(1000, seed);
    out << report.render();
    return report.passed() ? kExitOk : kExitVerification;
}

int run_main(int argc, char **argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Steered measurement-only stabilizer circuits: sweeps, PCA and data collapse"};
    app.require_subcommand(1);

    SweepArgs sweep;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Run a (L, p) sweep and write the sweep CSV");
    sweep_cmd->add_option("--config", sweep.config, "JSON sweep configuration")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output CSV (default: config 'out', else stdout)");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = OpenMP default)");
    sweep_cmd->add_option("--seed", sweep.seed, "Override the base seed");
    sweep_cmd->add_flag("--quiet", sweep.quiet, "No per-point progress on stderr");

    CollapseArgs col;
    std::vector<double> guess;
    CLI::App *col_cmd = app.add_subcommand("collapse", "Finite-size-scaling collapse of a sweep CSV");
    col_cmd->add_option("input", col.input, "Sweep CSV")->required();
    col_cmd->add_option("--out", col.out, "Output prefix for <out>.json and <out>_master.csv");
    col_cmd->add_option("--min-L", col.min_L, "Drop sizes below this");
    col_cmd->add_option("--degree", col.degree, "Master-curve polynomial degree");
    col_cmd->add_option("--guess", guess, "Starting p_c nu alpha")->expected(3);
    const std::map<std::string, ResidueScale> residues = {
        {"absolute", ResidueScale::kAbsolute}, {"relative", ResidueScale::kRelative}, {"chi2", ResidueScale::kChiSquare}};
    col_cmd->add_option("--residue", col.residue, "Collapse objective: chi2 (default), relative or absolute")
        ->transform(CLI::CheckedTransformer(residues, CLI::ignore_case));

    PcaDumpArgs dump;
    CLI::App *dump_cmd = app.add_subcommand("pca-dump", "Weighting vectors and 2-D projections at one point");
    dump_cmd->add_option("--config", dump.config, "JSON sweep configuration")->required();
    dump_cmd->add_option("--out", dump.out, "Output prefix");
    dump_cmd->add_option("--L", dump.L, "System size (default: first of the config)");
    dump_cmd->add_option("--p", dump.p, "Scanned value (default: first of the config)");
    dump_cmd->add_option("--components", dump.components, "Number of principal directions");
    dump_cmd->add_option("--threads", dump.threads, "Worker threads (0 = OpenMP default)");
    dump_cmd->add_option("--seed", dump.seed, "Override the base seed");

    uint64_t appendix_seed = 1;
    CLI::App *verify_cmd = app.add_subcommand("verify-appendix-b", "Check the 8-qubit Z-error example");
    verify_cmd->add_option("--seed", appendix_seed, "Seed for the outcome stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitConfig;
    }

    if (*sweep_cmd) {
        return cmd_sweep(sweep, out, err);
    }
    if (*col_cmd) {
        if (!guess.empty()) {
            col.guess = ScalingParams{guess[0], guess[1], guess[2]};
        }
        return cmd_collapse(col, out, err);
    }
    if (*dump_cmd) {
        return cmd_pca_dump(dump, out, err);
    }
    return cmd_verify_appendix_b(appendix_seed, out);
}

}  // namespace steerqc::cli
