// SPDX-License-Identifier: Apache-2.0
//
// io.hpp — CSV and JSON serialization of run artifacts.
//
// CSV doubles are printed with %.17g so that identical configs reproduce
// byte-identical files on the same platform.  Wall time and other
// environment-dependent values go to the JSON summaries only, never to CSV.

#ifndef AMPEQ_IO_HPP
#define AMPEQ_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ampeq/evolution.hpp"
#include "ampeq/experiments.hpp"
#include "ampeq/inequality_lab.hpp"
#include "ampeq/trig_poly.hpp"

namespace ampeq {

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// TrigPoly JSON: {"K": n, "coeffs": [[re_0, im_0], ..., [re_K, im_K]]}
// (negative modes implied by Hermitian symmetry)
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const TrigPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= f.max_mode(); ++k)
        coeffs.push_back({f.coeff(k).real(), f.coeff(k).imag()});
    return nlohmann::json{{"K", f.max_mode()}, {"coeffs", coeffs}};
}

inline TrigPoly trig_poly_from_json(const nlohmann::json& j) {
    const int K = j.at("K").get<int>();
    TrigPoly f(K);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != K + 1)
        throw std::invalid_argument("trig_poly_from_json: need K+1 coefficient pairs");
    for (int k = 0; k <= K; ++k)
        f.set_coeff(k, complexd{coeffs[static_cast<std::size_t>(k)][0].get<double>(),
                                coeffs[static_cast<std::size_t>(k)][1].get<double>()});
    return f;
}

inline nlohmann::json to_json(const SolverConfig& c) {
    return nlohmann::json{{"mu", c.mu},
                          {"delta", c.delta},
                          {"K", c.K},
                          {"cfl", c.cfl},
                          {"form", to_string(c.form)},
                          {"horizon", c.horizon},
                          {"save_stride", c.save_stride},
                          {"C1", c.C1},
                          {"diag_s", c.diag_s},
                          {"fixed_dt", c.fixed_dt},
                          {"oversample", c.oversample}};
}

// ---------------------------------------------------------------------------
// Trajectory CSV + run summary
// ---------------------------------------------------------------------------

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,norm_Hs_phi,norm_Hs1_phit,margin_min,energy_E,apriori_ratio,mean_phi,dt\n";
    for (const auto& d : traj.diagnostics) {
        os << format_double(d.t) << ',' << format_double(d.norm_phi_s) << ','
           << format_double(d.norm_phit_s1) << ',' << format_double(d.margin_min) << ','
           << format_double(d.energy) << ',' << format_double(d.apriori_ratio) << ','
           << format_double(d.mean_phi) << ',' << format_double(d.dt) << '\n';
    }
}

inline nlohmann::json run_summary_json(const Trajectory& traj, const std::string& status,
                                       double wall_time_s) {
    nlohmann::json j;
    j["config"] = to_json(traj.config);
    j["status"] = status;
    j["wall_time_s"] = wall_time_s;
    if (!traj.states.empty()) {
        j["final"] = {
            {"t", traj.final().t},
            {"norm_Hs_phi", sobolev_norm(traj.final().varphi, traj.config.diag_s)},
            {"norm_Hs1_phit", sobolev_norm(traj.final().varphi_t, traj.config.diag_s - 1.0)},
            {"mean_phi", traj.final().varphi.mean()}};
    }
    return j;
}

// ---------------------------------------------------------------------------
// Inequality lab
// ---------------------------------------------------------------------------

inline void write_campaign_csv(std::ostream& os, const RatioReport& rep) {
    os << "seed,K,params,lhs,rhs_factor,ratio,degenerate\n";
    for (const auto& s : rep.samples) {
        std::ostringstream params;
        for (std::size_t i = 0; i < s.params.size(); ++i) {
            if (i) params << ';';
            params << s.params[i].first << '=' << format_double(s.params[i].second);
        }
        os << s.seed << ',' << s.K << ',' << params.str() << ',' << format_double(s.lhs)
           << ',' << format_double(s.rhs_factor) << ',' << format_double(s.ratio) << ','
           << (s.degenerate ? 1 : 0) << '\n';
    }
}

inline nlohmann::json to_json(const RatioReport& rep) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : rep.levels)
        levels.push_back({{"K", l.K},
                          {"max", l.max_ratio},
                          {"median", l.median_ratio},
                          {"p99", l.p99_ratio},
                          {"degenerate", l.degenerate}});
    return nlohmann::json{{"inequality", rep.inequality},
                          {"samples_per_level", rep.samples_per_level},
                          {"seed", rep.seed},
                          {"levels", levels},
                          {"degenerate_ok", rep.degenerate_ok},
                          {"verdict", rep.verdict}};
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

inline void write_dependence_csv(std::ostream& os,
                                 const std::vector<DependenceRecord>& records) {
    os << "n,data_dist,strong_dist,weak_dist,ratio_strong_over_data\n";
    for (const auto& r : records)
        os << r.n << ',' << format_double(r.data_dist) << ',' << format_double(r.strong_dist)
           << ',' << format_double(r.weak_dist) << ','
           << format_double(r.data_dist > 0.0 ? r.strong_dist / r.data_dist : 0.0) << '\n';
}

inline void write_triangulation_csv(std::ostream& os,
                                    const std::vector<TriangulationReport>& reps) {
    os << "n,epsilon,K_eps,cutoff_gap,M_eps,leg1,leg1_over_eps,leg2,measured_total,"
          "strong_dist,weak_dist,fitted_regularized,fitted_diff6,fitted_final,triangle_ok\n";
    for (const auto& r : reps)
        os << r.n << ',' << format_double(r.epsilon) << ',' << r.K_eps << ','
           << format_double(r.cutoff_gap) << ',' << format_double(r.M_eps) << ','
           << format_double(r.leg1) << ',' << format_double(r.leg1_over_eps) << ','
           << format_double(r.leg2) << ',' << format_double(r.measured_total) << ','
           << format_double(r.strong_dist) << ',' << format_double(r.weak_dist) << ','
           << format_double(r.fitted_regularized) << ',' << format_double(r.fitted_diff6)
           << ',' << format_double(r.fitted_final) << ',' << (r.triangle_ok ? 1 : 0) << '\n';
}

inline void write_growth_csv(std::ostream& os, const std::vector<GrowthFit>& fits) {
    os << "k,lambda,growth\n";
    for (const auto& f : fits)
        os << f.k << ',' << format_double(f.lambda) << ',' << format_double(f.growth) << '\n';
}

inline void write_resolution_csv(std::ostream& os, const std::vector<ResolutionRow>& rows) {
    os << "K_coarse,K_fine,dist_phi,dist_pair\n";
    for (const auto& r : rows)
        os << r.K_coarse << ',' << r.K_fine << ',' << format_double(r.dist_phi) << ','
           << format_double(r.dist_pair) << '\n';
}

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

inline constexpr const char* version_string = "0.1.0";

/// FNV-1a over the raw configuration text.
inline std::string config_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline nlohmann::json manifest_json(const std::string& experiment,
                                    const std::string& config_text, std::uint64_t seed,
                                    const std::vector<std::string>& files) {
    return nlohmann::json{{"experiment", experiment},
                          {"config_hash", config_hash(config_text)},
                          {"version", version_string},
                          {"seed", seed},
                          {"files", files}};
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
}

}  // namespace ampeq

#endif  // AMPEQ_IO_HPP
