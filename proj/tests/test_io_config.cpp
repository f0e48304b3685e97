// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch.hpp>

#include <sstream>

#include "ampeq/config.hpp"
#include "ampeq/io.hpp"

using namespace ampeq;

TEST_CASE("config parsing") {
    SECTION("sections, comments, lists and defaults") {
        const Config cfg = Config::parse(
            "# a comment\n"
            "[problem]\n"
            "mu = 2.0   # trailing comment\n"
            "delta = 0.5\n"
            "[numerics]\n"
            "K = 24\n"
            "form = B\n"
            "[experiment]\n"
            "n_list = 2, 4, 8\n"
            "epsilon_list = 1e-1, 1e-3\n");
        const SolverConfig sc = cfg.solver_config();
        CHECK(sc.mu == 2.0);
        CHECK(sc.delta == 0.5);
        CHECK(sc.K == 24);
        CHECK(sc.form == Form::B);
        CHECK(sc.cfl == 0.5);  // default
        const ExperimentConfig ec = cfg.experiment_config();
        CHECK(ec.n_list == std::vector<int>{2, 4, 8});
        CHECK(ec.epsilon_list == std::vector<double>{1e-1, 1e-3});
        CHECK(ec.s == 3.0);  // default
    }
    SECTION("empty config is all defaults") {
        const Config cfg = Config::parse("");
        CHECK(cfg.solver_config().K == 32);
        CHECK(cfg.experiment_config().n_list == std::vector<int>{2, 4, 8, 16});
    }
    SECTION("unknown key is an error") {
        CHECK_THROWS_AS(Config::parse("[problem]\nwibble = 1\n"), ConfigError);
    }
    SECTION("unknown section is an error") {
        CHECK_THROWS_AS(Config::parse("[universe]\nmu = 1\n"), ConfigError);
    }
    SECTION("key outside a section is an error") {
        CHECK_THROWS_AS(Config::parse("mu = 1\n"), ConfigError);
    }
    SECTION("malformed number is an error") {
        CHECK_THROWS_AS(Config::parse("[problem]\nmu = fast\n").solver_config(), ConfigError);
    }
    SECTION("data kinds") {
        CHECK(l2_norm(Config::build_datum("zero", 8, 1.0, 1, 0, 3.0, 0.4)) == 0.0);
        CHECK(Config::build_datum("cosine", 8, 0.5, 2, 0, 3.0, 0.4).coeff(2).real() == 0.25);
        CHECK(Config::build_datum("random", 8, 1.0, 1, 7, 2.0, 0.4).mean() == 0.0);
        CHECK(Config::build_datum("analytic", 8, 0.1, 0.5, 0, 3.0, 0.5).max_mode() == 8);
        CHECK_THROWS_AS(Config::build_datum("triangle", 8, 1.0, 1, 0, 3.0, 0.4), ConfigError);
    }
}

TEST_CASE("trig poly JSON round trip") {
    const TrigPoly f = random_trig(99, 12, 1.5, 0.8) + TrigPoly::constant(0.3, 12);
    const TrigPoly back = trig_poly_from_json(to_json(f));
    REQUIRE(back.max_mode() == f.max_mode());
    for (int k = 0; k <= f.max_mode(); ++k) CHECK(back.coeff(k) == f.coeff(k));
    CHECK_THROWS_AS(
        trig_poly_from_json(nlohmann::json{{"K", 3}, {"coeffs", {{1.0, 0.0}}}}),
        std::invalid_argument);
}

TEST_CASE("trajectory CSV schema") {
    SolverConfig cfg;
    cfg.K = 4;
    cfg.horizon = 0.1;
    cfg.fixed_dt = 0.05;
    const Trajectory traj = solve_nonlinear(cfg, TrigPoly::cosine(1, 0.01), TrigPoly::zero(4));
    std::ostringstream os;
    write_trajectory_csv(os, traj);
    const std::string text = os.str();
    CHECK(text.rfind("t,norm_Hs_phi,norm_Hs1_phit,margin_min,energy_E,apriori_ratio,"
                     "mean_phi,dt\n", 0) == 0);
    // one row per saved step plus the header
    const auto rows = std::count(text.begin(), text.end(), '\n');
    CHECK(rows == static_cast<long>(traj.diagnostics.size()) + 1);
}

TEST_CASE("ratio report JSON carries the verdict") {
    const RatioReport rep = run_campaign(Inequality::Poincare, 20, {8}, 11);
    const nlohmann::json j = to_json(rep);
    CHECK(j.at("inequality") == "poincare");
    CHECK(j.at("verdict") == rep.verdict);
    CHECK(j.at("levels").size() == 1);
}

TEST_CASE("config hash is stable and content-sensitive") {
    const std::string a = "[problem]\nmu = 1.0\n";
    CHECK(config_hash(a) == config_hash(a));
    CHECK(config_hash(a) != config_hash(a + " "));
}

TEST_CASE("format_double round trips bit patterns") {
    for (double v : {1.0 / 3.0, 2.5e-17, -0.0, 1e300}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
