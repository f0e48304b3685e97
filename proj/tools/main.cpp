// SPDX-License-Identifier: Apache-2.0
//
// ampeq — command-line driver for the amplitude-equation workbench.
//
// Subcommands:
//   solve       integrate the nonlinear Cauchy problem, write trajectory CSV
//   equiv-check verify the three right-hand-side forms agree on random states
//   ineq-lab    run a randomized inequality campaign
//   cont-dep    continuous-dependence experiment (base + perturbed family)
//   triangulate regularization pipeline over an epsilon schedule
//   illposed    frozen-background growth-rate probe
//   resolution  pairwise-distance refinement study
//
// Every subcommand reads an optional `key = value` config file (sections
// [problem], [numerics], [experiment]; all keys optional) and writes its
// artifacts plus a manifest.json into the output directory.  Exit code 0
// means every asserted invariant held.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ampeq/config.hpp"
#include "ampeq/io.hpp"

namespace fs = std::filesystem;
using namespace ampeq;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_override;
};

Config load_config(const CommonOpts& opts) {
    if (opts.config_path.empty()) return Config::parse("");
    return Config::parse_file(opts.config_path);
}

fs::path resolve_out_dir(const Config& cfg, const CommonOpts& opts) {
    const fs::path dir =
        opts.out_override.empty() ? fs::path(cfg.get_string("experiment.out_dir", "out"))
                                  : fs::path(opts.out_override);
    fs::create_directories(dir);
    return dir;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
    write_text_file(path.string(), j.dump(2) + "\n");
}

void write_manifest(const fs::path& dir, const std::string& experiment, const Config& cfg,
                    std::uint64_t seed, std::vector<std::string> files) {
    files.push_back("manifest.json");
    write_json(dir / "manifest.json", manifest_json(experiment, cfg.text(), seed, files));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_solve(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const SolverConfig sc = cfg.solver_config();
    const TrigPoly phi0 = cfg.initial_datum(sc.K);
    const TrigPoly phi1 = cfg.initial_velocity(sc.K);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Trajectory traj = solve_nonlinear(sc, phi0, phi1);
        std::ofstream csv(dir / "trajectory.csv", std::ios::binary);
        write_trajectory_csv(csv, traj);
        write_json(dir / "summary.json", run_summary_json(traj, "ok", seconds_since(t0)));
        nlohmann::json final_state;
        final_state["t"] = traj.final().t;
        final_state["varphi"] = to_json(traj.final().varphi);
        final_state["varphi_t"] = to_json(traj.final().varphi_t);
        write_json(dir / "final_state.json", final_state);
        write_manifest(dir, "solve", cfg, cfg.get_seed("problem.seed", 1),
                       {"trajectory.csv", "summary.json", "final_state.json"});
        std::cout << "solve: ok, " << traj.states.size() << " saved states, final t = "
                  << traj.final().t << "\n";
        return 0;
    } catch (const std::exception& e) {
        nlohmann::json j;
        j["config"] = to_json(sc);
        j["status"] = std::string("error: ") + e.what();
        j["wall_time_s"] = seconds_since(t0);
        write_json(dir / "summary.json", j);
        std::cerr << "solve failed: " << e.what() << "\n";
        return 1;
    }
}

int cmd_equiv_check(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const int K = cfg.get_int("experiment.equiv_K", 32);
    const int samples = cfg.get_int("experiment.equiv_samples", 50);
    const std::uint64_t seed = cfg.get_seed("experiment.equiv_seed", 2026);
    const double mu = cfg.get_double("problem.mu", 1.0);

    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const TrigPoly f = random_trig(seed + static_cast<std::uint64_t>(i), K, 3.0, 1.0);
        const TrigPoly a = acceleration(f, mu, Form::A);
        const TrigPoly b = acceleration(f, mu, Form::B);
        const TrigPoly c = acceleration(f, mu, Form::C);
        const int M = 4 * (2 * a.max_mode() + 1);
        const SampleGrid ga = synthesize(a, M), gb = synthesize(b, M), gc = synthesize(c, M);
        double scale = 0.0, dev = 0.0;
        for (int j = 0; j < M; ++j) {
            scale = std::max(scale, std::abs(ga.values[static_cast<std::size_t>(j)]));
            dev = std::max({dev,
                            std::abs(ga.values[static_cast<std::size_t>(j)] -
                                     gb.values[static_cast<std::size_t>(j)]),
                            std::abs(ga.values[static_cast<std::size_t>(j)] -
                                     gc.values[static_cast<std::size_t>(j)])});
        }
        worst = std::max(worst, dev / scale);
    }
    const bool pass = worst <= 1e-10;
    write_json(dir / "equiv.json", nlohmann::json{{"K", K},
                                                  {"samples", samples},
                                                  {"seed", seed},
                                                  {"max_relative_deviation", worst},
                                                  {"tolerance", 1e-10},
                                                  {"pass", pass}});
    write_manifest(dir, "equiv-check", cfg, seed, {"equiv.json"});
    std::cout << "equiv-check: max relative deviation " << format_double(worst)
              << (pass ? " (pass)\n" : " (FAIL)\n");
    return pass ? 0 : 1;
}

int cmd_ineq_lab(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const Inequality id =
        inequality_from_string(cfg.get_string("experiment.inequality", "comm_l2"));
    const int samples = cfg.get_int("experiment.samples", 1000);
    const std::vector<int> K_levels =
        cfg.get_int_list("experiment.K_levels", {16, 32, 64});
    const std::uint64_t seed = cfg.get_seed("experiment.campaign_seed", 20260101);
    CampaignParams params;
    params.tau = cfg.get_double("experiment.tau", params.tau);
    params.sigma = cfg.get_double("experiment.sigma", params.sigma);
    params.s = cfg.get_double("experiment.s", params.s);
    params.p_cycle = cfg.get_int_list("experiment.p_list", params.p_cycle);
    params.amplitude = cfg.get_double("experiment.campaign_amplitude", params.amplitude);
    params.mean_offset = cfg.get_double("experiment.mean_offset", params.mean_offset);

    const RatioReport rep = run_campaign(id, samples, K_levels, seed, params);
    {
        std::ofstream csv(dir / "campaign.csv", std::ios::binary);
        write_campaign_csv(csv, rep);
    }
    write_json(dir / "report.json", to_json(rep));
    write_manifest(dir, "ineq-lab", cfg, seed, {"campaign.csv", "report.json"});

    bool hard_ok = true;
    if (id == Inequality::Hilbert || id == Inequality::Poincare ||
        id == Inequality::Interpolation) {
        for (const auto& s : rep.samples) hard_ok = hard_ok && s.ratio <= 1.0 + 1e-12;
    }
    const bool pass = rep.bounded() && rep.degenerate_ok && hard_ok;
    std::cout << "ineq-lab " << rep.inequality << ": verdict " << rep.verdict
              << ", max ratio " << format_double(rep.max_ratio())
              << (pass ? " (pass)\n" : " (FAIL)\n");
    return pass ? 0 : 1;
}

int cmd_cont_dep(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const ExperimentConfig ec = cfg.experiment_config();
    const TrigPoly phi0 = cfg.initial_datum(ec.base.K);
    const TrigPoly phi1 = cfg.initial_velocity(ec.base.K);

    const auto t0 = std::chrono::steady_clock::now();
    const ContinuousDependenceResult res = run_continuous_dependence(ec, phi0, phi1);
    {
        std::ofstream csv(dir / "contdep.csv", std::ios::binary);
        write_dependence_csv(csv, res.records);
    }
    nlohmann::json j;
    j["config"] = to_json(ec.base);
    j["s"] = ec.s;
    j["horizon_used"] = res.horizon_used;
    j["dt_used"] = res.dt_used;
    j["wall_time_s"] = seconds_since(t0);
    {
        // a priori ratio monitor: reported against C2 when one is configured
        double worst = 0.0;
        for (const auto& d : res.base.diagnostics) worst = std::max(worst, d.apriori_ratio);
        for (const auto& traj : res.perturbed)
            for (const auto& d : traj.diagnostics) worst = std::max(worst, d.apriori_ratio);
        j["max_apriori_ratio"] = worst;
        if (ec.C2 > 0.0) j["apriori_within_C2"] = worst <= ec.C2;
    }
    write_json(dir / "summary.json", j);
    write_manifest(dir, "cont-dep", cfg, cfg.get_seed("problem.seed", 1),
                   {"contdep.csv", "summary.json"});
    std::cout << "cont-dep: " << res.records.size() << " perturbed runs, T = "
              << res.horizon_used << "\n";
    return 0;
}

int cmd_triangulate(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const ExperimentConfig ec = cfg.experiment_config();
    const int n = cfg.get_int("experiment.n", 0);
    const TrigPoly phi0 = cfg.initial_datum(ec.base.K);
    const TrigPoly phi1 = cfg.initial_velocity(ec.base.K);

    SolverConfig run_cfg = ec.base;
    if (run_cfg.fixed_dt == 0.0) {
        const auto ext = detail::grid_extrema(margin_coefficient(phi0, run_cfg.mu), 4);
        run_cfg.fixed_dt = run_cfg.cfl * (two_pi / (2.0 * run_cfg.K + 1.0)) /
                           std::sqrt(std::max(ext.max_value, run_cfg.mu));
    }
    run_cfg.save_stride = 1;
    const Trajectory base = solve_nonlinear(run_cfg, phi0, phi1);
    const Trajectory pert =
        n == 0 ? base
               : solve_nonlinear(run_cfg, truncated(perturbed_datum(ec, phi0, n), run_cfg.K),
                                 phi1);

    std::vector<TriangulationReport> reports;
    bool all_ok = true;
    for (double eps : ec.epsilon_list) {
        const TriangulationReport rep = run_triangulation(ec, base, pert, n, eps);
        all_ok = all_ok && rep.triangle_ok;
        reports.push_back(rep);
    }
    {
        std::ofstream csv(dir / "triangulate.csv", std::ios::binary);
        write_triangulation_csv(csv, reports);
    }
    write_manifest(dir, "triangulate", cfg, cfg.get_seed("problem.seed", 1),
                   {"triangulate.csv"});
    std::cout << "triangulate: " << reports.size() << " epsilon levels, triangle "
              << (all_ok ? "held\n" : "VIOLATED\n");
    return all_ok ? 0 : 1;
}

int cmd_illposed(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const double mu = cfg.get_double("problem.mu", 1.0);
    const double a = cfg.get_double("experiment.probe_a", 1.0);
    const std::vector<int> k_list = cfg.get_int_list("experiment.probe_k_list", {8, 16, 32});
    const double T_short = cfg.get_double("experiment.T_short", 0.4);
    const int K = cfg.get_int("experiment.probe_K", 96);

    const auto fits = run_illposed_probe(mu, a, k_list, T_short, K);
    {
        std::ofstream csv(dir / "illposed.csv", std::ios::binary);
        write_growth_csv(csv, fits);
    }
    write_manifest(dir, "illposed", cfg, 0, {"illposed.csv"});
    for (const auto& f : fits)
        std::cout << "illposed: k = " << f.k << "  lambda = " << format_double(f.lambda)
                  << "\n";
    return 0;
}

int cmd_resolution(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const fs::path dir = resolve_out_dir(cfg, opts);
    const ExperimentConfig ec = cfg.experiment_config();
    const std::vector<int> K_list = cfg.get_int_list("experiment.K_list", {8, 16, 32});
    const TrigPoly phi0 = cfg.initial_datum(K_list.back());
    const TrigPoly phi1 = cfg.initial_velocity(K_list.back());

    const auto rows = run_resolution_study(ec, K_list, phi0, phi1);
    {
        std::ofstream csv(dir / "resolution.csv", std::ios::binary);
        write_resolution_csv(csv, rows);
    }
    write_manifest(dir, "resolution", cfg, cfg.get_seed("problem.seed", 1),
                   {"resolution.csv"});
    for (const auto& r : rows)
        std::cout << "resolution: K " << r.K_coarse << " -> " << r.K_fine << "  distance "
                  << format_double(r.dist_pair) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amplitude-equation solver and verification workbench"};
    app.require_subcommand(1);

    CommonOpts opts;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", opts.config_path, "configuration file");
        sub->add_option("-o,--out", opts.out_override, "output directory override");
    };

    int (*handler)(const CommonOpts&) = nullptr;
    const auto wire = [&](const char* name, const char* desc, int (*fn)(const CommonOpts&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub);
        sub->callback([&handler, fn] { handler = fn; });
    };
    wire("solve", "integrate the nonlinear Cauchy problem", cmd_solve);
    wire("equiv-check", "check the three acceleration forms agree", cmd_equiv_check);
    wire("ineq-lab", "run a randomized inequality campaign", cmd_ineq_lab);
    wire("cont-dep", "continuous dependence experiment", cmd_cont_dep);
    wire("triangulate", "regularization triangulation pipeline", cmd_triangulate);
    wire("illposed", "frozen-background growth-rate probe", cmd_illposed);
    wire("resolution", "grid refinement study", cmd_resolution);

    CLI11_PARSE(app, argc, argv);
    try {
        return handler(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
