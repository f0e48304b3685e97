// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// exit code 0 only if all pass.  Tolerances are pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ampeq/experiments.hpp"
#include "ampeq/io.hpp"

using namespace ampeq;

namespace {

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw CriterionFailure(msg);
}

double max_abs_node(const TrigPoly& f) {
    const int M = 4 * (2 * f.max_mode() + 1);
    const SampleGrid g = synthesize(f, M);
    double m = 0.0;
    for (double v : g.values) m = std::max(m, std::abs(v));
    return m;
}

double pair_distance(const State& a, const State& b, double s) {
    const double d0 = sobolev_norm(a.varphi - b.varphi, s);
    const double d1 = sobolev_norm(a.varphi_t - b.varphi_t, s - 1.0);
    return std::sqrt(d0 * d0 + d1 * d1);
}

// 1. Forms A, B, C agree to 1e-10 relative at the nodes, 50 random states, K=32.
void criterion_form_equivalence() {
    const double mu = 1.0;
    for (int i = 0; i < 50; ++i) {
        const TrigPoly f = random_trig(9000 + static_cast<std::uint64_t>(i), 32, 3.0, 1.0);
        const TrigPoly a = acceleration(f, mu, Form::A);
        const TrigPoly b = acceleration(f, mu, Form::B);
        const TrigPoly c = acceleration(f, mu, Form::C);
        const double scale = max_abs_node(a);
        require(max_abs_node(a - b) <= 1e-10 * scale, "A vs B deviation above 1e-10");
        require(max_abs_node(a - c) <= 1e-10 * scale, "A vs C deviation above 1e-10");
    }
}

// 2. Q[a cos x] = a² exactly, sup-norm error <= 1e-12 for a in {0.1, 1, 3}.
void criterion_q_closed_form() {
    for (double a : {0.1, 1.0, 3.0}) {
        const TrigPoly q = quadratic_q(TrigPoly::cosine(1, a));
        const TrigPoly expect = TrigPoly::constant(a * a, q.max_mode());
        require(max_abs_node(q - expect) <= 1e-12,
                "Q closed form off at a = " + std::to_string(a));
    }
}

// 3. Hard bounds: 1000-sample campaigns, every ratio <= 1 + 1e-12;
//    mean-zero hilbert ratio and single-mode poincare ratio equal 1 ± 1e-12.
void criterion_hard_bounds() {
    const std::vector<int> levels = {16, 32, 64};
    CampaignParams with_mean;
    with_mean.s = 2.0;
    with_mean.mean_offset = 0.5;
    for (const auto& rep :
         {run_campaign(Inequality::Hilbert, 1000, levels, 31001, with_mean),
          run_campaign(Inequality::Poincare, 1000, levels, 31002),
          run_campaign(Inequality::Interpolation, 1000, levels, 31003)}) {
        for (const auto& s : rep.samples)
            require(s.ratio <= 1.0 + 1e-12, rep.inequality + " ratio above 1");
        require(rep.degenerate_ok, rep.inequality + " degenerate sample with nonzero lhs");
    }
    const RatioReport mz = run_campaign(Inequality::Hilbert, 1000, levels, 31004);
    for (const auto& s : mz.samples)
        require(std::abs(s.ratio - 1.0) <= 1e-12, "mean-zero hilbert ratio not 1");
    for (double s : {1.0, 2.0, 3.0}) {
        const RatioSample p =
            ratio_poincare(TrigPoly::cosine(1, 0.7) + TrigPoly::sine(1, -0.2), s);
        require(std::abs(p.ratio - 1.0) <= 1e-12, "single-mode poincare ratio not 1");
    }
}

// 4. Commutator campaigns bounded at K in {16,32,64}; observed maxima stay
//    within 15% of the archived goldens; the convolution and
//    operator-difference routes agree to 1e-12 relative.
void criterion_commutator_campaigns() {
    const std::vector<int> levels = {16, 32, 64};
    const auto check = [&](const RatioReport& rep, double golden) {
        require(rep.bounded(), rep.inequality + " campaign not bounded");
        require(rep.max_ratio() <= 1.15 * golden,
                rep.inequality + " max ratio regressed past the archived golden");
    };
    CampaignParams l2;
    l2.tau = 1.0;
    check(run_campaign(Inequality::CommL2, 1000, levels, 32001, l2), 0.614548);
    CampaignParams cp;
    cp.tau = 1.0;
    check(run_campaign(Inequality::CommP, 1000, levels, 32002, cp), 0.530279);
    {
        CampaignParams bi;  // r = 3 regime: tau = r-1, sigma = r-2
        bi.tau = 2.0;
        bi.sigma = 1.0;
        check(run_campaign(Inequality::CommBesselI, 1000, levels, 32003, bi), 0.711849);
        CampaignParams bii;  // r = 2.25 regime: tau = 1.25, sigma = 3-r
        bii.tau = 1.25;
        bii.sigma = 0.75;
        check(run_campaign(Inequality::CommBesselII, 1000, levels, 32004, bii), 0.427193);
        CampaignParams biii;  // r = 2.5 endpoint: tau = 1.5
        biii.tau = 1.5;
        check(run_campaign(Inequality::CommBesselIII, 1000, levels, 32005, biii), 0.468312);
    }
    for (int i = 0; i < 100; ++i) {
        for (double tau : {1.0, 2.5}) {
            const TrigPoly v =
                random_trig(33000 + static_cast<std::uint64_t>(i), 32, 2.5, 1.0);
            const TrigPoly f =
                random_trig(34000 + static_cast<std::uint64_t>(i), 32, 1.0, 1.0);
            const TrigPoly direct = commutator_bessel(tau, v, f);
            const TrigPoly diff = bessel(multiply(v, f), tau) - multiply(v, bessel(f, tau));
            const double scale = std::max(l2_norm(direct), l2_norm(diff));
            require(l2_norm(direct - diff) <= 1e-12 * scale,
                    "commutator cross-check above 1e-12 relative");
        }
    }
}

// 5. Q-estimate campaigns bounded at s in {3, 3.5}, maxima within 15% of
//    the archived goldens.
void criterion_q_campaigns() {
    const std::vector<int> levels = {16, 32, 64};
    const auto check = [](const RatioReport& rep, double golden, double s) {
        require(rep.bounded(),
                rep.inequality + " campaign not bounded at s = " + std::to_string(s));
        require(rep.max_ratio() <= 1.15 * golden,
                rep.inequality + " max ratio regressed past the archived golden");
    };
    for (double s : {3.0, 3.5}) {
        CampaignParams p;
        p.s = s;
        check(run_campaign(Inequality::QBound, 1000, levels, 35001, p),
              s == 3.0 ? 0.842392 : 1.019088, s);
        check(run_campaign(Inequality::QDiffS, 1000, levels, 35002, p),
              s == 3.0 ? 0.437528 : 0.344473, s);
    }
    check(run_campaign(Inequality::QDiff, 1000, levels, 35003), 0.657236, 0.0);
}

// 6. Constant-coefficient linear solves reproduce the closed-form solutions
//    with error <= 10·dt⁴ per unit time; halving dt contracts 16x ± 30%.
void criterion_linear_exactness() {
    const auto error_at = [](double mu, const TrigPoly& psi0,
                             const std::function<TrigPoly(double)>& exact, double dt) {
        SolverConfig cfg;
        cfg.mu = mu;
        cfg.delta = 0.25 * mu;
        cfg.K = 8;
        cfg.horizon = 2.0;
        cfg.fixed_dt = dt;
        LinearProblem prob;
        prob.background = Background::zero(cfg.K);
        prob.psi0 = psi0;
        prob.psi1 = TrigPoly::zero(1);
        const Trajectory traj = solve_linear(cfg, prob);
        double worst_rate = 0.0, final_err = 0.0;
        for (const auto& st : traj.states) {
            const double err = l2_norm(st.varphi - exact(st.t));
            worst_rate = std::max(worst_rate, err / std::max(st.t, 1.0));
            final_err = err;
        }
        return std::make_pair(worst_rate, final_err);
    };

    const auto cos_case = [](double t) { return TrigPoly::cosine(1, std::cos(t)); };
    const auto sin_case = [](double t) { return TrigPoly::sine(1, std::cos(2.0 * t)); };

    for (double dt : {4e-3, 2e-3}) {
        const auto [rate1, e1] = error_at(1.0, TrigPoly::cosine(1), cos_case, dt);
        require(rate1 <= 10.0 * std::pow(dt, 4), "mu=1 linear error above 10·dt^4 per unit t");
        const auto [rate2, e2] = error_at(4.0, TrigPoly::sine(1), sin_case, dt);
        require(rate2 <= 10.0 * std::pow(dt, 4), "mu=4 linear error above 10·dt^4 per unit t");
    }
    const double c1 = error_at(1.0, TrigPoly::cosine(1), cos_case, 4e-3).second /
                      error_at(1.0, TrigPoly::cosine(1), cos_case, 2e-3).second;
    require(c1 >= 16.0 * 0.7 && c1 <= 16.0 * 1.3,
            "dt-halving contraction " + std::to_string(c1) + " outside 16x ± 30%");
}

// 7. Energy identity residuals: constant-coefficient residual <= 1e-8 at
//    dt = 1e-3; generic-background residuals contract 4x ± 20% per halving
//    for the L² identity and the order-r identities, r in {2, 3}.
void criterion_energy_identities() {
    {
        SolverConfig cfg;
        cfg.mu = 1.0;
        cfg.delta = 0.25;
        cfg.K = 8;
        cfg.horizon = 0.1;
        cfg.fixed_dt = 1e-3;
        LinearProblem prob;
        prob.background = Background::zero(cfg.K);
        prob.psi0 = TrigPoly::cosine(1);
        prob.psi1 = TrigPoly::zero(1);
        const Trajectory traj = solve_linear(cfg, prob);
        require(energy_identity_residual(traj, prob).max_residual <= 1e-8,
                "constant-coefficient residual above 1e-8");
    }
    LinearProblem prob;
    prob.background = Background::analytic([](double t) {
        return State{t, TrigPoly::cosine(1, 0.12 * std::cos(1.3 * t)),
                     TrigPoly::cosine(1, -0.156 * std::sin(1.3 * t))};
    });
    prob.source = [](double t) { return TrigPoly::cosine(2, 0.3 * std::sin(t)); };
    prob.psi0 = TrigPoly::cosine(1, 0.5) + TrigPoly::sine(2, 0.2);
    prob.psi1 = TrigPoly::sine(1, 0.3);
    const auto max_res = [&](double dt, double r) {
        SolverConfig cfg;
        cfg.mu = 1.0;
        cfg.delta = 0.25;
        cfg.K = 8;
        cfg.horizon = 0.5;
        cfg.fixed_dt = dt;
        const Trajectory traj = solve_linear(cfg, prob);
        return (r == 1.0 ? energy_identity_residual(traj, prob)
                         : higher_energy_identity_residual(traj, prob, r))
            .max_residual;
    };
    for (double r : {1.0, 2.0, 3.0}) {
        const double ratio = max_res(0.01, r) / max_res(0.005, r);
        require(ratio >= 4.0 * 0.8 && ratio <= 4.0 * 1.2,
                "residual contraction at r = " + std::to_string(r) + " is " +
                    std::to_string(ratio) + ", outside 4x ± 20%");
    }
}

// 8. Nonlinear solver: exact mean conservation, fourth-order reversibility,
//    spectral refinement, and form-independent trajectories.
void criterion_nonlinear_solver() {
    SolverConfig cfg;
    cfg.mu = 1.0;
    cfg.delta = 0.1;
    cfg.K = 16;
    cfg.horizon = 1.0;
    const TrigPoly phi0 = geometric_trig(16, 0.05, 0.6);
    const TrigPoly phi1 = TrigPoly::zero(16);

    {
        const Trajectory traj = solve_nonlinear(cfg, phi0, phi1);
        for (const auto& d : traj.diagnostics)
            require(std::abs(d.mean_phi) <= 1e-12, "mean drifted above 1e-12");
    }
    {
        // backward leg at half step so the two legs' phase errors cannot
        // cancel; the contraction is then the scheme's global order
        const auto rev_err = [&](double dt) {
            SolverConfig c = cfg;
            c.fixed_dt = dt;
            const Trajectory fwd = solve_nonlinear(c, phi0, phi1);
            SolverConfig cb = cfg;
            cb.fixed_dt = 0.5 * dt;
            const Trajectory bwd =
                solve_nonlinear(cb, fwd.final().varphi, -1.0 * fwd.final().varphi_t);
            const State rec{0.0, bwd.final().varphi, -1.0 * bwd.final().varphi_t};
            return pair_distance(rec, State{0.0, phi0, phi1}, 3.0);
        };
        const double ratio = rev_err(0.02) / rev_err(0.01);
        require(ratio >= 16.0 * 0.7 && ratio <= 16.0 * 1.3,
                "reversibility contraction " + std::to_string(ratio) + " outside 16x ± 30%");
    }
    {
        ExperimentConfig ec;
        ec.base = cfg;
        ec.base.horizon = 0.5;
        ec.base.fixed_dt = 5e-3;
        ec.s = 3.0;
        const auto rows =
            run_resolution_study(ec, {8, 16, 32}, geometric_trig(32, 0.05, 0.7),
                                 TrigPoly::zero(32));
        require(rows[0].dist_pair / rows[1].dist_pair >= 10.0,
                "refinement gain below 10x per doubling");
    }
    {
        SolverConfig c = cfg;
        c.fixed_dt = 0.01;
        c.form = Form::A;
        const Trajectory ta = solve_nonlinear(c, phi0, phi1);
        c.form = Form::B;
        const Trajectory tb = solve_nonlinear(c, phi0, phi1);
        c.form = Form::C;
        const Trajectory tc = solve_nonlinear(c, phi0, phi1);
        require(pair_distance(ta.final(), tb.final(), 3.0) <= 1e-8,
                "forms A and B diverged beyond 1e-8");
        require(pair_distance(ta.final(), tc.final(), 3.0) <= 1e-8,
                "forms A and C diverged beyond 1e-8");
    }
}

// 9. Continuous dependence at desk scale: strong distance strictly
//    decreasing in n, D_n/d_n within a factor 2 of its median, weak <=
//    strong at every sample (the solver asserts the samplewise inequality).
void criterion_continuous_dependence() {
    ExperimentConfig cfg;
    cfg.base.mu = 1.0;
    cfg.base.delta = 0.1;
    cfg.base.K = 32;
    cfg.base.horizon = 1.0;
    cfg.base.diag_s = 3.0;
    cfg.s = 3.0;
    cfg.R = 1.0;
    cfg.n_list = {2, 4, 8, 16};
    const auto res =
        run_continuous_dependence(cfg, TrigPoly::cosine(1, 1e-2), TrigPoly::zero(1));
    std::vector<double> ratios;
    for (std::size_t i = 0; i < res.records.size(); ++i) {
        const auto& r = res.records[i];
        require(std::isfinite(r.strong_dist), "non-finite distance");
        require(r.weak_dist <= r.strong_dist, "weak distance above strong distance");
        if (i > 0) {
            require(r.strong_dist < res.records[i - 1].strong_dist,
                    "strong distance not strictly decreasing in n");
            // the weak topology converges at least as fast as the strong one
            require(r.weak_dist / res.records[i - 1].weak_dist <=
                        r.strong_dist / res.records[i - 1].strong_dist * (1.0 + 1e-10),
                    "weak distance converging slower than strong distance");
        }
        ratios.push_back(r.strong_dist / r.data_dist);
    }
    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    for (double r : ratios)
        require(r <= 2.0 * median && r >= 0.5 * median,
                "D_n/d_n strays beyond a factor 2 of the median");
}

// 10. Triangulation with the collapsed perturbation: measured total
//     distance <= C·ε with C varying < 50% across ε in {1e-1,1e-2,1e-3};
//     leg-1/ε stays within the same stability band; the reassembled
//     triangle bound holds pointwise.
void criterion_triangulation() {
    ExperimentConfig cfg;
    cfg.base.mu = 1.0;
    cfg.base.delta = 0.1;
    cfg.base.K = 48;
    cfg.base.horizon = 1.0;
    cfg.base.fixed_dt = 0.01;
    cfg.s = 3.0;
    const TrigPoly phi0 = geometric_trig(48, 0.01, 0.40);

    double c_lo = 1e300, c_hi = 0.0, leg_lo = 1e300, leg_hi = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        const TriangulationReport rep = run_triangulation(cfg, phi0, TrigPoly::zero(48), 0, eps);
        require(rep.triangle_ok, "triangle reassembly violated");
        require(rep.cutoff_gap <= eps, "cutoff exceeded the ε budget");
        const double C = rep.measured_total / eps;
        c_lo = std::min(c_lo, C);
        c_hi = std::max(c_hi, C);
        leg_lo = std::min(leg_lo, rep.leg1_over_eps);
        leg_hi = std::max(leg_hi, rep.leg1_over_eps);
    }
    require(c_hi / c_lo < 1.5,
            "total/ε constant varies by " + std::to_string(c_hi / c_lo) + " (>= 50%)");
    require(leg_hi / leg_lo < 1.5, "leg-1/ε ratio not stable across the schedule");
}

// 11. Ill-posedness probe: fitted rates double with k (± 20%), each pair
//     probed within its growth cap; the hyperbolic control shows no growth.
void criterion_illposed_probe() {
    const auto low = run_illposed_probe(1.0, 1.0, {8, 16}, 0.8, 96);
    const double r1 = low[1].lambda / low[0].lambda;
    require(r1 >= 1.6 && r1 <= 2.4,
            "lambda_16/lambda_8 = " + std::to_string(r1) + " outside 2 ± 20%");
    require(low[1].growth <= 1e6, "growth cap exceeded");

    const auto high = run_illposed_probe(1.0, 1.0, {16, 32}, 0.4, 96);
    const double r2 = high[1].lambda / high[0].lambda;
    require(r2 >= 1.6 && r2 <= 2.4,
            "lambda_32/lambda_16 = " + std::to_string(r2) + " outside 2 ± 20%");
    require(high[1].growth <= 1e6, "growth cap exceeded");

    const auto ctrl = run_illposed_probe(1.0, 0.2, {8}, 0.35, 64);
    require(std::abs(ctrl[0].lambda) <= 0.5,
            "hyperbolic control rate " + std::to_string(ctrl[0].lambda) + " not near zero");
}

// 12. Guardrails: margin violations raise typed errors deterministically;
//     degenerate lab inputs never produce lhs above 1e-14.
void criterion_guardrails() {
    SolverConfig cfg;
    cfg.mu = 1.0;
    cfg.delta = 0.1;
    cfg.K = 8;
    const auto attempt_nonlinear = [&]() -> std::string {
        try {
            solve_nonlinear(cfg, TrigPoly::cosine(1), TrigPoly::zero(1));
        } catch (const InadmissibleData& e) {
            return e.what();
        }
        return "";
    };
    const std::string m1 = attempt_nonlinear(), m2 = attempt_nonlinear();
    require(!m1.empty(), "margin-violating data did not raise InadmissibleData");
    require(m1 == m2, "InadmissibleData not deterministic");

    const auto attempt_linear = [&]() -> std::string {
        LinearProblem prob;
        prob.background = Background::frozen(TrigPoly::cosine(1, 0.6));
        prob.psi0 = TrigPoly::cosine(1, 0.1);
        prob.psi1 = TrigPoly::zero(1);
        try {
            solve_linear(cfg, prob);
        } catch (const StabilityLost& e) {
            return e.what();
        }
        return "";
    };
    const std::string s1 = attempt_linear(), s2 = attempt_linear();
    require(!s1.empty(), "margin-violating background did not raise StabilityLost");
    require(s1 == s2, "StabilityLost not deterministic");

    CampaignParams zero_amp;
    zero_amp.amplitude = 0.0;
    for (Inequality id : {Inequality::Poincare, Inequality::QBound, Inequality::QDiff}) {
        const RatioReport rep = run_campaign(id, 50, {8, 16}, 36001, zero_amp);
        require(rep.degenerate_ok, std::string(to_string(id)) +
                                       ": degenerate input produced lhs above 1e-14");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"form equivalence (A = B = C to 1e-10)", criterion_form_equivalence},
        {"Q closed form at single modes", criterion_q_closed_form},
        {"hard inequality bounds (hilbert/poincare/interpolation)", criterion_hard_bounds},
        {"commutator campaigns bounded + route cross-check", criterion_commutator_campaigns},
        {"Q estimate campaigns bounded", criterion_q_campaigns},
        {"linear solver exactness and dt order", criterion_linear_exactness},
        {"energy identity residuals", criterion_energy_identities},
        {"nonlinear solver invariants", criterion_nonlinear_solver},
        {"continuous dependence", criterion_continuous_dependence},
        {"triangulation pipeline", criterion_triangulation},
        {"ill-posedness probe", criterion_illposed_probe},
        {"guardrails", criterion_guardrails},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool pass = true;
        try {
            criteria[i].fn();
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2zu: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].label, secs, note.empty() ? "" : " — ", note.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
