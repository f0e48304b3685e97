// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch.hpp>

#include <cmath>

#include "ampeq/experiments.hpp"

using namespace ampeq;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.base.mu = 1.0;
    cfg.base.delta = 0.1;
    cfg.base.K = 16;
    cfg.base.cfl = 0.5;
    cfg.base.horizon = 1.0;
    cfg.base.diag_s = 3.0;
    cfg.s = 3.0;
    cfg.R = 1.0;
    cfg.n_list = {2, 4};
    return cfg;
}

}  // namespace

TEST_CASE("perturbation family is H^s-normalized") {
    const ExperimentConfig cfg = small_config();
    const TrigPoly base = TrigPoly::cosine(1, 1e-2);
    for (int n : {2, 4, 8}) {
        const TrigPoly pert = perturbed_datum(cfg, base, n) - base;
        // a_n/√2 exactly: the smoothing cancels the H^s mode weight
        CHECK(sobolev_norm(pert, cfg.s) ==
              Approx((1.0 / n) / std::sqrt(2.0)).epsilon(1e-13));
    }
    // mode schedule saturates at K/2
    ExperimentConfig capped = cfg;
    capped.base.K = 8;
    const TrigPoly p16 = perturbed_datum(capped, base, 16) - base;
    CHECK(p16.max_mode() >= 4);
    CHECK(std::abs(p16.coeff(4)) > 0.0);
}

TEST_CASE("continuous dependence on identical data is exactly zero") {
    ExperimentConfig cfg = small_config();
    cfg.family.amp_scale = 0.0;
    const auto res = run_continuous_dependence(cfg, TrigPoly::cosine(1, 1e-2),
                                               TrigPoly::zero(1));
    for (const auto& rec : res.records) {
        CHECK(rec.data_dist == 0.0);
        CHECK(rec.strong_dist == 0.0);
        CHECK(rec.weak_dist == 0.0);
    }
}

TEST_CASE("continuous dependence tracks the data distance") {
    ExperimentConfig cfg = small_config();
    cfg.n_list = {2, 4, 8};
    const auto res = run_continuous_dependence(cfg, TrigPoly::cosine(1, 1e-2),
                                               TrigPoly::zero(1));
    REQUIRE(res.records.size() == 3);
    for (std::size_t i = 1; i < res.records.size(); ++i)
        CHECK(res.records[i].strong_dist < res.records[i - 1].strong_dist);
    for (const auto& rec : res.records) {
        CHECK(rec.weak_dist <= rec.strong_dist);
        CHECK(rec.strong_dist / rec.data_dist == Approx(1.0).epsilon(0.05));
    }

    SECTION("halving the perturbation amplitude halves the distances") {
        ExperimentConfig half = cfg;
        half.family.amp_scale = 0.5;
        const auto res2 = run_continuous_dependence(half, TrigPoly::cosine(1, 1e-2),
                                                    TrigPoly::zero(1));
        for (std::size_t i = 0; i < res2.records.size(); ++i) {
            CHECK(res2.records[i].data_dist ==
                  Approx(0.5 * res.records[i].data_dist).epsilon(1e-12));
            CHECK(res2.records[i].strong_dist ==
                  Approx(0.5 * res.records[i].strong_dist).epsilon(0.10));
        }
    }
}

TEST_CASE("continuous dependence rejects inadmissible base data") {
    ExperimentConfig cfg = small_config();
    cfg.R = 0.01;
    CHECK_THROWS_AS(
        run_continuous_dependence(cfg, TrigPoly::cosine(1, 0.2), TrigPoly::zero(1)),
        InadmissibleData);
}

TEST_CASE("triangulation on zero base data collapses entirely") {
    ExperimentConfig cfg = small_config();
    cfg.base.fixed_dt = 0.02;
    const auto rep = run_triangulation(cfg, TrigPoly::zero(16), TrigPoly::zero(16), 0, 1e-2);
    CHECK(rep.K_eps == 0);
    CHECK(rep.leg1 == 0.0);
    CHECK(rep.leg2 == 0.0);
    CHECK(rep.measured_total == 0.0);
    CHECK(rep.strong_dist == 0.0);
    CHECK(rep.triangle_ok);
}

TEST_CASE("triangulation with collapsed perturbation is controlled by epsilon") {
    ExperimentConfig cfg = small_config();
    cfg.base.K = 40;
    cfg.base.fixed_dt = 0.01;
    const TrigPoly phi0 = geometric_trig(40, 0.01, 0.40);

    double c_lo = 1e300, c_hi = 0.0;
    for (double eps : {1e-1, 1e-2}) {
        const auto rep = run_triangulation(cfg, phi0, TrigPoly::zero(40), 0, eps);
        CHECK(rep.triangle_ok);
        CHECK(rep.K_eps <= 40);
        CHECK(rep.cutoff_gap <= eps);
        CHECK(rep.measured_total <= 2.0 * eps);
        c_lo = std::min(c_lo, rep.measured_total / eps);
        c_hi = std::max(c_hi, rep.measured_total / eps);
        // collapsed perturbation: leg2 = leg1 and the strong distance is zero
        CHECK(rep.leg2 == rep.leg1);
        CHECK(rep.strong_dist == 0.0);
    }
    CHECK(c_hi / c_lo < 1.5);
}

TEST_CASE("triangulation against a genuinely perturbed run") {
    ExperimentConfig cfg = small_config();
    cfg.base.K = 32;
    cfg.base.fixed_dt = 0.01;
    const TrigPoly phi0 = geometric_trig(32, 0.01, 0.40);
    const auto rep = run_triangulation(cfg, phi0, TrigPoly::zero(32), 8, 1e-2);
    CHECK(rep.n == 8);
    CHECK(rep.strong_dist > 0.0);
    CHECK(rep.weak_dist <= rep.strong_dist);
    CHECK(rep.triangle_ok);  // strong(t) <= √2(leg1+leg2)(t)
    CHECK(rep.measured_total >= rep.strong_dist);
    CHECK(rep.fitted_diff6 > 0.0);
    CHECK(rep.fitted_final > 0.0);
}

TEST_CASE("triangulation epsilon budget can be infeasible") {
    ExperimentConfig cfg = small_config();
    cfg.base.K = 24;
    cfg.base.fixed_dt = 0.02;
    const TrigPoly phi0 = geometric_trig(24, 0.02, 0.4);
    CHECK_THROWS_AS(run_triangulation(cfg, phi0, TrigPoly::zero(24), 0, 1e-10),
                    CutoffInfeasible);
}

TEST_CASE("ill-posedness probe") {
    SECTION("frozen-coefficient rates scale linearly in k") {
        const auto f = run_illposed_probe(1.0, 1.0, {8, 16}, 0.8, 64);
        REQUIRE(f.size() == 2);
        CHECK(f[1].lambda / f[0].lambda == Approx(2.0).epsilon(0.20));
        CHECK(f[0].growth < 1e6);
        CHECK(f[1].growth < 1e6);
    }
    SECTION("hyperbolic control shows no growth") {
        const auto f = run_illposed_probe(1.0, 0.2, {8}, 0.35, 64);
        CHECK(std::abs(f[0].lambda) <= 0.5);
    }
    SECTION("rate grows with the background amplitude") {
        const double l1 = run_illposed_probe(1.0, 0.8, {16}, 0.3, 64)[0].lambda;
        const double l2 = run_illposed_probe(1.0, 1.0, {16}, 0.3, 64)[0].lambda;
        const double l3 = run_illposed_probe(1.0, 1.3, {16}, 0.3, 64)[0].lambda;
        CHECK(l1 < l2);
        CHECK(l2 < l3);
    }
    SECTION("parameter domain") {
        CHECK_THROWS_AS(run_illposed_probe(1.0, 1.0, {40}, 0.3, 64),
                        std::invalid_argument);
    }
}

TEST_CASE("resolution study") {
    ExperimentConfig cfg = small_config();
    cfg.base.horizon = 0.5;
    cfg.base.fixed_dt = 5e-3;
    const TrigPoly ref = geometric_trig(32, 0.05, 0.7);

    SECTION("smooth data: distances collapse spectrally") {
        const auto rows = run_resolution_study(cfg, {8, 16, 32}, ref, TrigPoly::zero(32));
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].dist_pair / rows[1].dist_pair >= 10.0);
        CHECK(rows[0].dist_phi / rows[1].dist_phi >= 10.0);
    }
    SECTION("zero data: all distances vanish") {
        const auto rows =
            run_resolution_study(cfg, {8, 16}, TrigPoly::zero(16), TrigPoly::zero(16));
        CHECK(rows[0].dist_pair == 0.0);
    }
    SECTION("K_list must increase") {
        CHECK_THROWS_AS(run_resolution_study(cfg, {16, 8}, ref, TrigPoly::zero(32)),
                        std::invalid_argument);
    }
}
