// SPDX-License-Identifier: Apache-2.0
//
// operators.hpp — the nonlocal operators of the amplitude equation
//
//   φ_tt = μ φ_xx + N[φ],       φ := H[φ] (Hilbert companion field),
//
// with the quadratically nonlinear term N given in three algebraically
// equivalent forms (A, B, C below).  The equivalence rests on an exact
// cancellation of third-order derivatives, so all products here are exact
// convolutions at degree 2K; the caller decides when to project back.
//
// Also: the hyperbolicity margin μ - 2φ_x (positivity = local linear
// well-posedness of the linearization) and the two commutator families
// [H; v] and [⟨∂_x⟩^τ; v] used by the energy machinery.

#ifndef AMPEQ_OPERATORS_HPP
#define AMPEQ_OPERATORS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "ampeq/trig_poly.hpp"

namespace ampeq {

/// Selector for the three equivalent right-hand sides.
enum class Form { A, B, C };

inline const char* to_string(Form f) {
    switch (f) {
        case Form::A: return "A";
        case Form::B: return "B";
        default: return "C";
    }
}

inline Form form_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Form::A;
    if (s == "B" || s == "b") return Form::B;
    if (s == "C" || s == "c") return Form::C;
    throw std::invalid_argument("form must be one of A, B, C");
}

/// Minimum of the coefficient μ - 2∂_x H[φ] over an oversampled grid.
struct Margin {
    double min_value = 0.0;
    double argmin_x = 0.0;
    int grid_oversample = 4;
};

/// The companion field φ = H[φ] that enters every coefficient and
/// commutator of the equation.
inline TrigPoly hilbert_field(const TrigPoly& varphi) { return hilbert(varphi); }

namespace detail {
/// min/max of a TrigPoly over the oversampled node set, with arg nodes.
struct GridExtrema {
    double min_value, max_value, argmin_x, argmax_x;
};
inline GridExtrema grid_extrema(const TrigPoly& f, int oversample) {
    const int M = oversample * (2 * f.max_mode() + 1);
    const SampleGrid g = synthesize(f, M);
    GridExtrema e{g.values[0], g.values[0], 0.0, 0.0};
    for (int j = 1; j < M; ++j) {
        const double v = g.values[static_cast<std::size_t>(j)];
        if (v < e.min_value) {
            e.min_value = v;
            e.argmin_x = g.node(j);
        }
        if (v > e.max_value) {
            e.max_value = v;
            e.argmax_x = g.node(j);
        }
    }
    return e;
}
}  // namespace detail

/// Hyperbolicity margin of the state φ: min over the grid of μ - 2∂_x H[φ].
/// The grid has oversample·(2K+1) nodes; the true minimum of the
/// trigonometric polynomial is approximated, which is enough for a
/// δ-threshold monitor.
inline Margin margin(const TrigPoly& varphi, double mu, int oversample = 4) {
    if (oversample < 4) throw std::invalid_argument("margin: oversample must be >= 4");
    const TrigPoly w = derivative(hilbert(varphi), 1);
    const auto e = detail::grid_extrema(w, oversample);
    // min(μ - 2w) is attained where w is largest
    return Margin{mu - 2.0 * e.max_value, e.argmax_x, oversample};
}

/// The full coefficient field μ - 2∂_x H[φ] as a TrigPoly (degree K).
inline TrigPoly margin_coefficient(const TrigPoly& varphi, double mu) {
    TrigPoly w = -2.0 * derivative(hilbert(varphi), 1);
    w.set_coeff(0, complexd{mu + w.coeff(0).real(), 0.0});
    return w;
}

/// [H; v]f = H[v·f] - v·H[f], exact products (degree K_v + K_f).
inline TrigPoly commutator_hilbert(const TrigPoly& v, const TrigPoly& f) {
    return hilbert(multiply(v, f)) - multiply(v, hilbert(f));
}

/// [⟨∂_x⟩^τ; v]f by the constructive convolution formula: coefficient at k is
/// Σ_ℓ (⟨k⟩^τ - ⟨ℓ⟩^τ)·v̂(k-ℓ)·f̂(ℓ).  Agrees with
/// bessel(multiply(v,f),τ) - multiply(v, bessel(f,τ)) to roundoff.
inline TrigPoly commutator_bessel(double tau, const TrigPoly& v, const TrigPoly& f) {
    if (tau < 0.0) throw std::invalid_argument("commutator_bessel: tau must be >= 0");
    const int Kv = v.max_mode(), Kf = f.max_mode();
    TrigPoly r(Kv + Kf);
    for (int k = 0; k <= Kv + Kf; ++k) {
        const double bk = bracket_pow(k, tau);
        complexd acc{0.0, 0.0};
        const int lo = std::max(-Kf, k - Kv), hi = std::min(Kf, k + Kv);
        for (int l = lo; l <= hi; ++l)
            acc += (bk - bracket_pow(l, tau)) * v.coeff(k - l) * f.coeff(l);
        if (k == 0) {
            // ±ℓ terms conjugate pairwise; scrub the rounding residue
            acc = complexd{acc.real(), 0.0};
        }
        r.set_coeff(k, acc);
    }
    return r;
}

/// Quadratic operator Q[φ] = -3[H; φ_x]φ_xx - [H; φ]φ_xxx with φ = H[φ].
/// Quadratically homogeneous; result degree 2K (caller truncates if needed).
inline TrigPoly quadratic_q(const TrigPoly& varphi) {
    const TrigPoly phi = hilbert(varphi);
    const TrigPoly phi_x = derivative(phi, 1);
    const TrigPoly phi_xx = derivative(phi, 2);
    const TrigPoly phi_xxx = derivative(phi, 3);
    return -3.0 * commutator_hilbert(phi_x, phi_xx) - commutator_hilbert(phi, phi_xxx);
}

/// Right-hand side of φ_tt, exact at degree 2K, in the selected form:
///   A:  μφ_xx + (½ H[φ²]_xx + φ·φ_xx)_x
///   B:  μφ_xx + ([H; φ]φ_xx + H[(φ_x)²])_x
///   C:  (μ - 2φ_x)·φ_xx - Q[φ]
/// with φ = H[φ].  Forms A and B are mean-zero by the outer derivative;
/// C is mean-zero as an identity.
inline TrigPoly acceleration(const TrigPoly& varphi, double mu, Form form) {
    const TrigPoly phi = hilbert(varphi);
    const TrigPoly varphi_xx = derivative(varphi, 2);
    switch (form) {
        case Form::A: {
            const TrigPoly flux =
                0.5 * derivative(hilbert(multiply(phi, phi)), 2) + multiply(phi, varphi_xx);
            return mu * varphi_xx + derivative(flux, 1);
        }
        case Form::B: {
            const TrigPoly phi_x = derivative(phi, 1);
            const TrigPoly flux =
                commutator_hilbert(phi, derivative(phi, 2)) + hilbert(multiply(phi_x, phi_x));
            return mu * varphi_xx + derivative(flux, 1);
        }
        default: {
            return multiply(margin_coefficient(varphi, mu), varphi_xx) - quadratic_q(varphi);
        }
    }
}

}  // namespace ampeq

#endif  // AMPEQ_OPERATORS_HPP
