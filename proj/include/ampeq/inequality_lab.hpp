// SPDX-License-Identifier: Apache-2.0
//
// inequality_lab.hpp — randomized empirical verification of the estimates
// behind the energy machinery: the Hilbert-transform bound, Poincaré,
// coefficient interpolation, the commutator bounds ([H;v] in L², [H;v]∂ᵖ in
// H^τ, [⟨∂_x⟩^τ;v] in three flavors), and the Q bounds.
//
// Hard inequalities (constant exactly 1) are asserted per sample; soft ones
// (existential constant) get a boundedness verdict: the max observed
// LHS/RHS ratio must not grow by 50% or more from the smallest to the
// largest resolution in the campaign.  No constant recovery is attempted —
// observed maxima are archived as regression goldens, nothing more.

#ifndef AMPEQ_INEQUALITY_LAB_HPP
#define AMPEQ_INEQUALITY_LAB_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ampeq/operators.hpp"
#include "ampeq/trig_poly.hpp"

namespace ampeq {

struct RatioSample {
    std::uint64_t seed = 0;
    int K = 0;
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs_factor = 0.0;
    double ratio = 0.0;
    bool degenerate = false;  // rhs_factor == 0; requires lhs <= 1e-14
};

namespace detail {
inline RatioSample make_sample(double lhs, double rhs,
                               std::vector<std::pair<std::string, double>> params) {
    RatioSample s;
    s.params = std::move(params);
    s.lhs = lhs;
    s.rhs_factor = rhs;
    if (rhs > 0.0) {
        s.ratio = lhs / rhs;
    } else {
        s.degenerate = true;
        s.ratio = 0.0;
    }
    return s;
}

inline void require_mean_zero_input(const TrigPoly& f, const char* who) {
    if (std::abs(f.mean()) > 1e-13 * (1.0 + l2_norm(f)))
        throw std::invalid_argument(std::string(who) + ": input must have zero mean");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Ratio operations, one per inequality
// ---------------------------------------------------------------------------

/// ‖H[f]‖_{H^s} vs ‖f‖_{H^s}; equality on mean-zero f, < 1 otherwise.
inline RatioSample ratio_hilbert(const TrigPoly& f, double s) {
    return detail::make_sample(sobolev_norm(hilbert(f), s), sobolev_norm(f, s), {{"s", s}});
}

/// ‖f‖_{H^s} vs √2‖f_x‖_{H^{s-1}} for mean-zero f, s >= 1.
inline RatioSample ratio_poincare(const TrigPoly& f, double s) {
    if (s < 1.0) throw std::invalid_argument("ratio_poincare: s must be >= 1");
    detail::require_mean_zero_input(f, "ratio_poincare");
    return detail::make_sample(sobolev_norm(f, s),
                               std::sqrt(2.0) * sobolev_norm(derivative(f, 1), s - 1.0),
                               {{"s", s}});
}

/// ‖f‖_{H^{s-1}} vs ‖f‖_{H^s}^{1-θ}·‖f‖_{H^1}^{θ}, θ = 1/(s-1); Hölder on
/// the coefficient side gives constant exactly 1.
inline RatioSample ratio_interpolation(const TrigPoly& f, double s) {
    if (s <= 2.0) throw std::invalid_argument("ratio_interpolation: s must be > 2");
    detail::require_mean_zero_input(f, "ratio_interpolation");
    const double theta = 1.0 / (s - 1.0);
    const double rhs =
        std::pow(sobolev_norm(f, s), 1.0 - theta) * std::pow(sobolev_norm(f, 1.0), theta);
    return detail::make_sample(sobolev_norm(f, s - 1.0), rhs, {{"s", s}});
}

/// ‖[H;v]f‖ vs ‖v‖_{H^τ}·‖f‖, τ > 1/2.
inline RatioSample ratio_comm_l2(double tau, const TrigPoly& v, const TrigPoly& f) {
    if (tau <= 0.5) throw std::invalid_argument("ratio_comm_l2: tau must be > 1/2");
    return detail::make_sample(l2_norm(commutator_hilbert(v, f)),
                               sobolev_norm(v, tau) * l2_norm(f), {{"tau", tau}});
}

/// ‖[H;v]∂_x^p f‖_{H^τ} vs ‖∂_x^p v‖_{H^τ}·‖f‖_{H^1}, τ >= 0, integer p >= 0.
inline RatioSample ratio_comm_p(double tau, int p, const TrigPoly& v, const TrigPoly& f) {
    if (tau < 0.0) throw std::invalid_argument("ratio_comm_p: tau must be >= 0");
    if (p < 0) throw std::invalid_argument("ratio_comm_p: p must be >= 0");
    const TrigPoly fp = p == 0 ? f : derivative(f, p);
    const TrigPoly vp = p == 0 ? v : derivative(v, p);
    return detail::make_sample(sobolev_norm(commutator_hilbert(v, fp), tau),
                               sobolev_norm(vp, tau) * sobolev_norm(f, 1.0),
                               {{"tau", tau}, {"p", static_cast<double>(p)}});
}

enum class BesselVariant { I, II, III };

/// ‖[⟨∂_x⟩^τ;v]f‖ against three right-hand sides:
///   I:   ‖v‖_{H^τ}‖f‖_{H^σ}       + ‖v_x‖_{H^1}‖f‖_{H^{τ-1}}   (σ > 1/2)
///   II:  ‖v‖_{H^{τ+σ}}‖f‖         + ‖v_x‖_{H^1}‖f‖_{H^{τ-1}}   (σ > 1/2)
///   III: ‖v‖_{H^{τ+1/2}}‖f‖_{H^{1/2}} + ‖v_x‖_{H^1}‖f‖_{H^{τ-1}}
inline RatioSample ratio_comm_bessel(BesselVariant variant, double tau, double sigma,
                                     const TrigPoly& v, const TrigPoly& f) {
    if (tau < 1.0) throw std::invalid_argument("ratio_comm_bessel: tau must be >= 1");
    if (variant != BesselVariant::III && sigma <= 0.5)
        throw std::invalid_argument("ratio_comm_bessel: sigma must be > 1/2");
    const double lhs = l2_norm(commutator_bessel(tau, v, f));
    const double tail = sobolev_norm(derivative(v, 1), 1.0) * sobolev_norm(f, tau - 1.0);
    double rhs = 0.0, sig = sigma;
    switch (variant) {
        case BesselVariant::I:
            rhs = sobolev_norm(v, tau) * sobolev_norm(f, sigma) + tail;
            break;
        case BesselVariant::II:
            rhs = sobolev_norm(v, tau + sigma) * l2_norm(f) + tail;
            break;
        case BesselVariant::III:
            sig = 0.5;
            rhs = sobolev_norm(v, tau + 0.5) * sobolev_norm(f, 0.5) + tail;
            break;
    }
    return detail::make_sample(lhs, rhs, {{"tau", tau}, {"sigma", sig}});
}

/// ‖Q[φ]‖_{H^{s-1}} vs ‖φ_x‖_{H^2}·‖φ_x‖_{H^{s-1}}, s >= 1, φ mean-zero.
inline RatioSample ratio_q(double s, const TrigPoly& varphi) {
    if (s < 1.0) throw std::invalid_argument("ratio_q: s must be >= 1");
    detail::require_mean_zero_input(varphi, "ratio_q");
    const TrigPoly vx = derivative(varphi, 1);
    return detail::make_sample(sobolev_norm(quadratic_q(varphi), s - 1.0),
                               sobolev_norm(vx, 2.0) * sobolev_norm(vx, s - 1.0), {{"s", s}});
}

/// ‖Q[φ]-Q[φ̃]‖ vs (‖φ‖_{H^3}+‖φ̃‖_{H^3})·‖(φ-φ̃)_x‖.
inline RatioSample ratio_q_diff(const TrigPoly& varphi, const TrigPoly& tvarphi) {
    detail::require_mean_zero_input(varphi, "ratio_q_diff");
    detail::require_mean_zero_input(tvarphi, "ratio_q_diff");
    const double lhs = l2_norm(quadratic_q(varphi) - quadratic_q(tvarphi));
    const double rhs = (sobolev_norm(varphi, 3.0) + sobolev_norm(tvarphi, 3.0)) *
                       l2_norm(derivative(varphi - tvarphi, 1));
    return detail::make_sample(lhs, rhs, {});
}

/// ‖Q[φ]-Q[φ̃]‖_{H^{s-1}} vs (‖φ‖_{H^s}+‖φ̃‖_{H^s})·‖φ-φ̃‖_{H^s}, s >= 3.
inline RatioSample ratio_q_diff_s(double s, const TrigPoly& varphi, const TrigPoly& tvarphi) {
    if (s < 3.0) throw std::invalid_argument("ratio_q_diff_s: s must be >= 3");
    detail::require_mean_zero_input(varphi, "ratio_q_diff_s");
    detail::require_mean_zero_input(tvarphi, "ratio_q_diff_s");
    const double lhs = sobolev_norm(quadratic_q(varphi) - quadratic_q(tvarphi), s - 1.0);
    const double rhs = (sobolev_norm(varphi, s) + sobolev_norm(tvarphi, s)) *
                       sobolev_norm(varphi - tvarphi, s);
    return detail::make_sample(lhs, rhs, {{"s", s}});
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

enum class Inequality {
    Hilbert,
    Poincare,
    Interpolation,
    CommL2,
    CommP,
    CommBesselI,
    CommBesselII,
    CommBesselIII,
    QBound,
    QDiff,
    QDiffS,
};

inline const char* to_string(Inequality id) {
    switch (id) {
        case Inequality::Hilbert: return "hilbert";
        case Inequality::Poincare: return "poincare";
        case Inequality::Interpolation: return "interpolation";
        case Inequality::CommL2: return "comm_l2";
        case Inequality::CommP: return "comm_p";
        case Inequality::CommBesselI: return "comm_bessel_i";
        case Inequality::CommBesselII: return "comm_bessel_ii";
        case Inequality::CommBesselIII: return "comm_bessel_iii";
        case Inequality::QBound: return "q_bound";
        case Inequality::QDiff: return "q_diff";
        default: return "q_diff_s";
    }
}

inline Inequality inequality_from_string(const std::string& s) {
    for (Inequality id :
         {Inequality::Hilbert, Inequality::Poincare, Inequality::Interpolation,
          Inequality::CommL2, Inequality::CommP, Inequality::CommBesselI,
          Inequality::CommBesselII, Inequality::CommBesselIII, Inequality::QBound,
          Inequality::QDiff, Inequality::QDiffS})
        if (s == to_string(id)) return id;
    throw std::invalid_argument("unknown inequality id: " + s);
}

struct CampaignParams {
    double tau = 1.0;
    double sigma = 1.0;
    std::vector<int> p_cycle = {0, 1, 2, 3};  // comm_p cycles through these
    double s = 3.0;
    double amplitude = 1.0;
    double mean_offset = 0.0;  // hilbert campaign: scale of a random mean shift
    double decay_v = -1.0;     // < 0 selects the per-inequality default
    double decay_f = -1.0;
};

struct LevelStats {
    int K = 0;
    double max_ratio = 0.0;
    double median_ratio = 0.0;
    double p99_ratio = 0.0;
    int degenerate = 0;
};

struct RatioReport {
    std::string inequality;
    int samples_per_level = 0;
    std::uint64_t seed = 0;
    std::vector<LevelStats> levels;
    std::vector<RatioSample> samples;
    bool degenerate_ok = true;  // every degenerate sample had lhs <= 1e-14
    std::string verdict;        // "bounded" | "suspicious"

    bool bounded() const { return verdict == "bounded"; }
    double max_ratio() const {
        double m = 0.0;
        for (const auto& l : levels) m = std::max(m, l.max_ratio);
        return m;
    }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t sample_seed(std::uint64_t seed, int K, int i, int slot) {
    return mix64(seed ^ mix64(static_cast<std::uint64_t>(K) << 32 ^
                              static_cast<std::uint64_t>(i) << 2 ^
                              static_cast<std::uint64_t>(slot)));
}

/// Default sampling smoothness per inequality: match the minimal regularity
/// the estimate demands, so campaigns probe near the edge.
struct Decays {
    double v, f;
};
inline Decays default_decays(Inequality id, const CampaignParams& p) {
    switch (id) {
        case Inequality::Hilbert: return {p.s, p.s};
        case Inequality::Poincare: return {p.s, p.s};
        case Inequality::Interpolation: return {p.s, p.s};
        case Inequality::CommL2: return {std::max(p.tau, 1.0), 0.0};
        case Inequality::CommP: {
            int max_p = 0;  // v needs H^{tau+p} for the largest cycled p
            for (int q : p.p_cycle) max_p = std::max(max_p, q);
            return {p.tau + static_cast<double>(max_p), 1.0};
        }
        case Inequality::CommBesselI:
            return {std::max(p.tau, 2.0), std::max(p.sigma, p.tau - 1.0)};
        case Inequality::CommBesselII:
            return {std::max(p.tau + p.sigma, 2.0), std::max(0.0, p.tau - 1.0)};
        case Inequality::CommBesselIII:
            return {std::max(p.tau + 0.5, 2.0), std::max(0.5, p.tau - 1.0)};
        case Inequality::QBound: return {std::max(p.s, 3.0), std::max(p.s, 3.0)};
        case Inequality::QDiff: return {3.0, 3.0};
        default: return {p.s, p.s};
    }
}

}  // namespace detail

/// Draw random inputs at each resolution level, evaluate one inequality per
/// sample, and aggregate max/median/p99 ratios per level.  Deterministic for
/// a fixed seed.  Verdict is "bounded" when the max ratio at the largest K
/// exceeds the max at the smallest K by less than 50%.
inline RatioReport run_campaign(Inequality id, int sample_count,
                                const std::vector<int>& K_levels, std::uint64_t seed,
                                CampaignParams params = {}) {
    if (sample_count < 1) throw std::invalid_argument("run_campaign: sample_count >= 1");
    if (K_levels.empty()) throw std::invalid_argument("run_campaign: K_levels empty");

    const detail::Decays dec = detail::default_decays(id, params);
    const double dv = params.decay_v >= 0.0 ? params.decay_v : dec.v;
    const double df = params.decay_f >= 0.0 ? params.decay_f : dec.f;

    RatioReport rep;
    rep.inequality = to_string(id);
    rep.samples_per_level = sample_count;
    rep.seed = seed;

    for (int K : K_levels) {
        std::vector<double> ratios;
        ratios.reserve(static_cast<std::size_t>(sample_count));
        LevelStats stats;
        stats.K = K;
        for (int i = 0; i < sample_count; ++i) {
            const std::uint64_t s0 = detail::sample_seed(seed, K, i, 0);
            const std::uint64_t s1 = detail::sample_seed(seed, K, i, 1);
            const TrigPoly a = random_trig(s0, K, dv, params.amplitude);
            RatioSample sample;
            switch (id) {
                case Inequality::Hilbert: {
                    TrigPoly f = random_trig(s1, K, df, params.amplitude);
                    if (params.mean_offset != 0.0) {
                        std::mt19937_64 rng(detail::sample_seed(seed, K, i, 2));
                        f = f + TrigPoly::constant(
                                    params.mean_offset * detail::uniform_pm1(rng), K);
                    }
                    sample = ratio_hilbert(f, params.s);
                    break;
                }
                case Inequality::Poincare:
                    sample = ratio_poincare(a, params.s);
                    break;
                case Inequality::Interpolation:
                    sample = ratio_interpolation(a, params.s);
                    break;
                case Inequality::CommL2:
                    sample = ratio_comm_l2(params.tau, a, random_trig(s1, K, df, params.amplitude));
                    break;
                case Inequality::CommP: {
                    const int p = params.p_cycle[static_cast<std::size_t>(i) %
                                                 params.p_cycle.size()];
                    sample = ratio_comm_p(params.tau, p, a,
                                          random_trig(s1, K, df, params.amplitude));
                    break;
                }
                case Inequality::CommBesselI:
                case Inequality::CommBesselII:
                case Inequality::CommBesselIII: {
                    const BesselVariant v = id == Inequality::CommBesselI
                                                ? BesselVariant::I
                                                : (id == Inequality::CommBesselII
                                                       ? BesselVariant::II
                                                       : BesselVariant::III);
                    sample = ratio_comm_bessel(v, params.tau, params.sigma, a,
                                               random_trig(s1, K, df, params.amplitude));
                    break;
                }
                case Inequality::QBound:
                    sample = ratio_q(params.s, a);
                    break;
                case Inequality::QDiff:
                    sample = ratio_q_diff(a, random_trig(s1, K, df, params.amplitude));
                    break;
                case Inequality::QDiffS:
                    sample = ratio_q_diff_s(params.s, a,
                                            random_trig(s1, K, df, params.amplitude));
                    break;
            }
            sample.seed = s0;
            sample.K = K;
            if (sample.degenerate) {
                ++stats.degenerate;
                if (sample.lhs > 1e-14) rep.degenerate_ok = false;
            } else {
                ratios.push_back(sample.ratio);
            }
            rep.samples.push_back(std::move(sample));
        }
        if (!ratios.empty()) {
            std::sort(ratios.begin(), ratios.end());
            stats.max_ratio = ratios.back();
            stats.median_ratio = ratios[ratios.size() / 2];
            stats.p99_ratio =
                ratios[std::min(ratios.size() - 1,
                                static_cast<std::size_t>(std::ceil(0.99 * ratios.size())) - 1)];
        }
        rep.levels.push_back(stats);
    }

    const double first = rep.levels.front().max_ratio;
    const double last = rep.levels.back().max_ratio;
    const bool bounded = first == 0.0 ? last <= 1e-12 : last < 1.5 * first;
    rep.verdict = bounded ? "bounded" : "suspicious";
    return rep;
}

}  // namespace ampeq

#endif  // AMPEQ_INEQUALITY_LAB_HPP
