// SPDX-License-Identifier: Apache-2.0
//
// config.hpp — the experiment configuration format: UTF-8 text, one
// `key = value` per line, grouped under [problem], [numerics] and
// [experiment] headers.  '#' starts a comment.  Unknown sections and
// unknown keys are hard errors; every key has a documented default, so an
// empty file is a valid configuration.

#ifndef AMPEQ_CONFIG_HPP
#define AMPEQ_CONFIG_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ampeq/evolution.hpp"
#include "ampeq/experiments.hpp"
#include "ampeq/inequality_lab.hpp"

namespace ampeq {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Config {
public:
    static Config parse_file(const std::string& path) {
        std::ifstream is(path);
        if (!is) throw ConfigError("cannot open config file: " + path);
        std::ostringstream ss;
        ss << is.rdbuf();
        return parse(ss.str());
    }

    static Config parse(const std::string& text) {
        Config cfg;
        cfg.text_ = text;
        std::istringstream is(text);
        std::string line, section;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            const std::string stripped = strip(line.substr(0, line.find('#')));
            if (stripped.empty()) continue;
            if (stripped.front() == '[') {
                if (stripped.back() != ']')
                    throw ConfigError("line " + std::to_string(lineno) + ": bad section header");
                section = stripped.substr(1, stripped.size() - 2);
                if (section != "problem" && section != "numerics" && section != "experiment")
                    throw ConfigError("unknown section [" + section + "]");
                continue;
            }
            const auto eq = stripped.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) + ": key outside a section");
            const std::string key = strip(stripped.substr(0, eq));
            const std::string value = strip(stripped.substr(eq + 1));
            if (!allowed_keys(section).count(key))
                throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
            cfg.values_[section + "." + key] = value;
        }
        return cfg;
    }

    const std::string& text() const { return text_; }

    double get_double(const std::string& dotted, double fallback) const {
        const auto it = values_.find(dotted);
        if (it == values_.end()) return fallback;
        return parse_double(dotted, it->second);
    }

    int get_int(const std::string& dotted, int fallback) const {
        const auto it = values_.find(dotted);
        if (it == values_.end()) return fallback;
        try {
            std::size_t pos = 0;
            const int v = std::stoi(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ConfigError("key " + dotted + ": expected integer, got '" + it->second + "'");
        }
    }

    std::uint64_t get_seed(const std::string& dotted, std::uint64_t fallback) const {
        const auto it = values_.find(dotted);
        if (it == values_.end()) return fallback;
        try {
            return std::stoull(it->second);
        } catch (...) {
            throw ConfigError("key " + dotted + ": expected unsigned integer");
        }
    }

    std::string get_string(const std::string& dotted, const std::string& fallback) const {
        const auto it = values_.find(dotted);
        return it == values_.end() ? fallback : it->second;
    }

    std::vector<int> get_int_list(const std::string& dotted,
                                  const std::vector<int>& fallback) const {
        const auto it = values_.find(dotted);
        if (it == values_.end()) return fallback;
        std::vector<int> out;
        for (const std::string& tok : split(it->second)) {
            try {
                out.push_back(std::stoi(tok));
            } catch (...) {
                throw ConfigError("key " + dotted + ": expected integer list");
            }
        }
        if (out.empty()) throw ConfigError("key " + dotted + ": empty list");
        return out;
    }

    std::vector<double> get_double_list(const std::string& dotted,
                                        const std::vector<double>& fallback) const {
        const auto it = values_.find(dotted);
        if (it == values_.end()) return fallback;
        std::vector<double> out;
        for (const std::string& tok : split(it->second)) out.push_back(parse_double(dotted, tok));
        if (out.empty()) throw ConfigError("key " + dotted + ": empty list");
        return out;
    }

    // -- assembled views ------------------------------------------------

    SolverConfig solver_config() const {
        SolverConfig c;
        c.mu = get_double("problem.mu", c.mu);
        c.delta = get_double("problem.delta", c.delta);
        c.K = get_int("numerics.K", c.K);
        c.cfl = get_double("numerics.cfl", c.cfl);
        c.form = form_from_string(get_string("numerics.form", "C"));
        c.horizon = get_double("numerics.T", c.horizon);
        c.save_stride = get_int("numerics.save_stride", c.save_stride);
        c.C1 = get_double("numerics.C1", c.C1);
        c.diag_s = get_double("numerics.diag_s", c.diag_s);
        c.fixed_dt = get_double("numerics.dt", c.fixed_dt);
        c.oversample = get_int("numerics.oversample", c.oversample);
        c.validate();
        return c;
    }

    ExperimentConfig experiment_config() const {
        ExperimentConfig e;
        e.base = solver_config();
        e.s = get_double("experiment.s", e.s);
        e.R = get_double("experiment.R", e.R);
        e.C2 = get_double("experiment.C2", e.C2);
        e.family.amp_scale = get_double("experiment.pert_amp", e.family.amp_scale);
        e.family.mode_cap = get_int("experiment.pert_mode_cap", e.family.mode_cap);
        e.family.smoothing = get_double("experiment.pert_smoothing", e.family.smoothing);
        e.n_list = get_int_list("experiment.n_list", e.n_list);
        e.epsilon_list = get_double_list("experiment.epsilon_list", e.epsilon_list);
        e.out_dir = get_string("experiment.out_dir", e.out_dir);
        e.validate();
        return e;
    }

    /// Initial datum described by the [problem] section.
    TrigPoly initial_datum(int K) const {
        return build_datum(get_string("problem.data", "cosine"), K,
                           get_double("problem.amplitude", 0.01),
                           get_int("problem.mode", 1), get_seed("problem.seed", 1),
                           get_double("problem.decay", 3.0),
                           get_double("problem.rate", 0.4));
    }

    /// Initial velocity; defaults to zero.
    TrigPoly initial_velocity(int K) const {
        return build_datum(get_string("problem.phi1_data", "zero"), K,
                           get_double("problem.phi1_amplitude", 0.0),
                           get_int("problem.phi1_mode", 1),
                           get_seed("problem.seed", 1) + 1,
                           get_double("problem.decay", 3.0),
                           get_double("problem.rate", 0.4));
    }

    static TrigPoly build_datum(const std::string& kind, int K, double amplitude, int mode,
                                std::uint64_t seed, double decay, double rate) {
        if (kind == "zero") return TrigPoly::zero(K);
        if (kind == "cosine") return truncated(TrigPoly::cosine(std::min(mode, K), amplitude), K);
        if (kind == "sine") return truncated(TrigPoly::sine(std::min(mode, K), amplitude), K);
        if (kind == "random") return random_trig(seed, K, decay, amplitude);
        if (kind == "analytic") return geometric_trig(K, amplitude, rate);
        throw ConfigError("unknown data kind '" + kind +
                          "' (expected zero|cosine|sine|random|analytic)");
    }

private:
    static std::string strip(const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return "";
        const auto b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
    }

    static std::vector<std::string> split(const std::string& s) {
        std::vector<std::string> out;
        std::string tok;
        std::istringstream is(s);
        while (std::getline(is, tok, ',')) {
            tok = strip(tok);
            if (!tok.empty()) out.push_back(tok);
        }
        return out;
    }

    static double parse_double(const std::string& key, const std::string& value) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ConfigError("key " + key + ": expected number, got '" + value + "'");
        }
    }

    static const std::set<std::string>& allowed_keys(const std::string& section) {
        static const std::set<std::string> problem = {
            "mu",   "delta", "data", "amplitude", "mode",      "seed",
            "decay", "rate",  "phi1_data", "phi1_amplitude", "phi1_mode"};
        static const std::set<std::string> numerics = {
            "K", "cfl", "dt", "save_stride", "oversample", "T", "form", "C1", "diag_s"};
        static const std::set<std::string> experiment = {
            "s",          "R",           "C2",          "n_list",     "epsilon_list",
            "pert_amp",   "pert_mode_cap", "pert_smoothing", "out_dir",    "inequality",
            "samples",    "K_levels",    "tau",         "sigma",      "p_list",
            "campaign_seed", "campaign_amplitude", "mean_offset", "probe_a", "probe_k_list",
            "probe_K",    "T_short",     "K_list",      "n",          "equiv_samples",
            "equiv_K",    "equiv_seed"};
        if (section == "problem") return problem;
        if (section == "numerics") return numerics;
        return experiment;
    }

    std::string text_;
    std::map<std::string, std::string> values_;
};

}  // namespace ampeq

#endif  // AMPEQ_CONFIG_HPP
