// SPDX-License-Identifier: Apache-2.0
//
// trig_poly.hpp — exact arithmetic on truncated Fourier series of real
// 2π-periodic functions.
//
// A TrigPoly stores the complex Fourier coefficients c_k, k = 0..K, of
//   f(x) = sum_{|k|<=K} c_k e^{ikx},  c_{-k} = conj(c_k),
// with the 1/(2π)-normalized coefficient convention
//   c_k = (1/2π) ∫_T f(x) e^{-ikx} dx.
// Negative modes are implied by Hermitian symmetry, so every value of the
// type represents a real-valued function by construction.  All integrals in
// this library are normalized as (1/2π)∫_T, so that ∫|f|² dx ≡ Σ|c_k|².
//
// Products are exact coefficient convolutions (degree-sum, alias-free);
// Galerkin truncation back to a target mode count is a separate explicit
// step.  There is no FFT: sizes are small and exactness is the point.

#ifndef AMPEQ_TRIG_POLY_HPP
#define AMPEQ_TRIG_POLY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ampeq {

using complexd = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

struct ResolutionTooLow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SymmetryViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// ⟨k⟩² = 1 + k²
inline double bracket_sq(int k) {
    const double kk = static_cast<double>(k);
    return 1.0 + kk * kk;
}

/// ⟨k⟩^s = (1+k²)^{s/2}
inline double bracket_pow(int k, double s) {
    if (s == 0.0) return 1.0;
    return std::pow(bracket_sq(k), 0.5 * s);
}

/// Real samples of a 2π-periodic function at the M uniform nodes x_j = 2πj/M.
struct SampleGrid {
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    double node(int j) const { return two_pi * j / static_cast<double>(size()); }
};

class TrigPoly {
public:
    explicit TrigPoly(int max_mode)
        : coeffs_(static_cast<std::size_t>(std::max(max_mode, 1)) + 1, complexd{0.0, 0.0}) {
        if (max_mode < 1) throw std::invalid_argument("TrigPoly: max_mode must be >= 1");
    }

    int max_mode() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient at any mode; negative modes come from Hermitian symmetry,
    /// modes beyond max_mode are zero.
    complexd coeff(int k) const {
        const int a = std::abs(k);
        if (a > max_mode()) return {0.0, 0.0};
        return k >= 0 ? coeffs_[static_cast<std::size_t>(a)]
                      : std::conj(coeffs_[static_cast<std::size_t>(a)]);
    }

    /// Set coefficient for k >= 0.  Mode 0 must be real (the function is
    /// real-valued); an imaginary part above tolerance is a symmetry error.
    void set_coeff(int k, complexd z) {
        if (k < 0 || k > max_mode())
            throw std::out_of_range("TrigPoly::set_coeff: mode out of range");
        if (k == 0) {
            if (std::abs(z.imag()) > 1e-12 * (1.0 + std::abs(z.real())))
                throw SymmetryViolation("TrigPoly: mode-0 coefficient must be real");
            coeffs_[0] = complexd{z.real(), 0.0};
        } else {
            coeffs_[static_cast<std::size_t>(k)] = z;
        }
    }

    double mean() const { return coeffs_[0].real(); }

    bool all_finite() const {
        for (const auto& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    // -- factories ----------------------------------------------------------

    static TrigPoly zero(int max_mode) { return TrigPoly(max_mode); }

    static TrigPoly constant(double value, int max_mode = 1) {
        TrigPoly f(max_mode);
        f.coeffs_[0] = complexd{value, 0.0};
        return f;
    }

    /// amplitude·cos(kx)
    static TrigPoly cosine(int k, double amplitude = 1.0) {
        TrigPoly f(k);
        f.coeffs_[static_cast<std::size_t>(k)] = complexd{0.5 * amplitude, 0.0};
        return f;
    }

    /// amplitude·sin(kx);  c_k = amplitude/(2i)
    static TrigPoly sine(int k, double amplitude = 1.0) {
        TrigPoly f(k);
        f.coeffs_[static_cast<std::size_t>(k)] = complexd{0.0, -0.5 * amplitude};
        return f;
    }

    // -- arithmetic ---------------------------------------------------------

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r(std::max(a.max_mode(), b.max_mode()));
        for (int k = 0; k <= r.max_mode(); ++k)
            r.coeffs_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }
    friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r(std::max(a.max_mode(), b.max_mode()));
        for (int k = 0; k <= r.max_mode(); ++k)
            r.coeffs_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }
    friend TrigPoly operator*(double s, const TrigPoly& f) {
        TrigPoly r = f;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend TrigPoly operator*(const TrigPoly& f, double s) { return s * f; }
    friend TrigPoly operator-(const TrigPoly& f) { return -1.0 * f; }

private:
    std::vector<complexd> coeffs_;  // modes 0..K
};

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

/// Discrete Fourier coefficients of real samples, 1/(2π)-normalized:
/// c_k = (1/M) Σ_j f_j e^{-ik x_j}.  Exact on trig polynomials of degree
/// <= M-1-K; in particular analyze∘synthesize is the identity when M >= 2K+1.
inline TrigPoly analyze(const SampleGrid& samples, int K) {
    const int M = samples.size();
    if (M < 2 * K + 1)
        throw ResolutionTooLow("analyze: need at least 2K+1 samples, got " + std::to_string(M));
    TrigPoly f(K);
    double mean = 0.0;
    for (int j = 0; j < M; ++j) mean += samples.values[static_cast<std::size_t>(j)];
    f.set_coeff(0, complexd{mean / M, 0.0});
    for (int k = 1; k <= K; ++k) {
        complexd acc{0.0, 0.0};
        for (int j = 0; j < M; ++j) {
            const double ang = -two_pi * k * j / static_cast<double>(M);
            acc += samples.values[static_cast<std::size_t>(j)] *
                   complexd{std::cos(ang), std::sin(ang)};
        }
        f.set_coeff(k, acc / static_cast<double>(M));
    }
    return f;
}

/// Evaluate on M uniform nodes.  Values are real by construction
/// (f_j = c_0 + 2·Re Σ_{k>=1} c_k e^{ikx_j}); Hermitian symmetry is
/// structural, so no imaginary residue can occur.
inline SampleGrid synthesize(const TrigPoly& f, int M) {
    if (M < 2 * f.max_mode() + 1)
        throw ResolutionTooLow("synthesize: need M >= 2K+1 nodes");
    SampleGrid g;
    g.values.resize(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        double v = f.coeff(0).real();
        for (int k = 1; k <= f.max_mode(); ++k) {
            const double ang = two_pi * k * j / static_cast<double>(M);
            const complexd c = f.coeff(k);
            v += 2.0 * (c.real() * std::cos(ang) - c.imag() * std::sin(ang));
        }
        g.values[static_cast<std::size_t>(j)] = v;
    }
    return g;
}

/// Pointwise evaluation at arbitrary x (test and diagnostics helper).
inline double evaluate(const TrigPoly& f, double x) {
    double v = f.coeff(0).real();
    for (int k = 1; k <= f.max_mode(); ++k) {
        const complexd c = f.coeff(k);
        v += 2.0 * (c.real() * std::cos(k * x) - c.imag() * std::sin(k * x));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Fourier multipliers
// ---------------------------------------------------------------------------

/// m-th derivative: multiplier (ik)^m, computed exactly via i^m cycling.
inline TrigPoly derivative(const TrigPoly& f, int m = 1) {
    if (m < 1) throw std::invalid_argument("derivative: order must be >= 1");
    TrigPoly r(f.max_mode());
    for (int k = 1; k <= f.max_mode(); ++k) {
        const double km = std::pow(static_cast<double>(k), m);
        complexd factor;
        switch (m & 3) {
            case 0: factor = {km, 0.0}; break;
            case 1: factor = {0.0, km}; break;
            case 2: factor = {-km, 0.0}; break;
            default: factor = {0.0, -km}; break;
        }
        r.set_coeff(k, factor * f.coeff(k));
    }
    return r;  // mode 0 stays 0: derivative is mean-zero
}

/// Periodic Hilbert transform: multiplier -i·sgn(k), so H[cos kx] = sin kx.
/// H∘H = -(identity - mean); isometric on mean-zero functions.
inline TrigPoly hilbert(const TrigPoly& f) {
    TrigPoly r(f.max_mode());
    for (int k = 1; k <= f.max_mode(); ++k)
        r.set_coeff(k, complexd{0.0, -1.0} * f.coeff(k));
    return r;
}

/// Bessel potential ⟨∂_x⟩^s: multiplier ⟨k⟩^s = (1+k²)^{s/2}; s may be
/// negative (smoothing).  bessel(bessel(f,s),-s) = f.
inline TrigPoly bessel(const TrigPoly& f, double s) {
    TrigPoly r(f.max_mode());
    for (int k = 0; k <= f.max_mode(); ++k)
        r.set_coeff(k, bracket_pow(k, s) * f.coeff(k));
    return r;
}

inline TrigPoly project_mean_zero(const TrigPoly& f) {
    TrigPoly r = f;
    r.set_coeff(0, complexd{0.0, 0.0});
    return r;
}

/// Galerkin projection onto modes |k| <= K (pads with zeros when K exceeds
/// the current degree).
inline TrigPoly truncated(const TrigPoly& f, int K) {
    TrigPoly r(K);
    for (int k = 0; k <= std::min(K, f.max_mode()); ++k) r.set_coeff(k, f.coeff(k));
    return r;
}

// ---------------------------------------------------------------------------
// Products and pairings
// ---------------------------------------------------------------------------

/// Exact pointwise product by coefficient convolution; result degree is
/// K_f + K_g unless truncate_to >= 1 requests a Galerkin projection.
inline TrigPoly multiply(const TrigPoly& f, const TrigPoly& g, int truncate_to = -1) {
    const int Kf = f.max_mode(), Kg = g.max_mode();
    const int Kfull = Kf + Kg;
    const int Kout = (truncate_to >= 1) ? std::min(truncate_to, Kfull) : Kfull;
    TrigPoly r(Kout);

    // mode 0 in real arithmetic so the mean is exactly real
    double c0 = f.coeff(0).real() * g.coeff(0).real();
    for (int l = 1; l <= std::min(Kf, Kg); ++l) {
        const complexd a = f.coeff(l), b = g.coeff(l);
        c0 += 2.0 * (a.real() * b.real() + a.imag() * b.imag());  // 2·Re(conj(a)b)
    }
    r.set_coeff(0, complexd{c0, 0.0});

    for (int k = 1; k <= Kout; ++k) {
        complexd acc{0.0, 0.0};
        const int lo = std::max(-Kg, k - Kf), hi = std::min(Kg, k + Kf);
        for (int l = lo; l <= hi; ++l) acc += f.coeff(k - l) * g.coeff(l);
        r.set_coeff(k, acc);
    }
    return r;
}

/// ‖f‖_{H^s} = (Σ_k ⟨k⟩^{2s}|c_k|²)^{1/2};  s = 0 gives the L² norm.
inline double sobolev_norm(const TrigPoly& f, double s) {
    double acc = std::norm(f.coeff(0));
    for (int k = 1; k <= f.max_mode(); ++k)
        acc += 2.0 * bracket_pow(k, 2.0 * s) * std::norm(f.coeff(k));
    return std::sqrt(acc);
}

inline double l2_norm(const TrigPoly& f) { return sobolev_norm(f, 0.0); }

/// (1/2π)∫_T f g dx = Σ_k f̂(k)·conj(ĝ(k)) for real f, g.
inline double inner_l2(const TrigPoly& f, const TrigPoly& g) {
    double acc = f.coeff(0).real() * g.coeff(0).real();
    for (int k = 1; k <= std::min(f.max_mode(), g.max_mode()); ++k) {
        const complexd a = f.coeff(k), b = g.coeff(k);
        acc += 2.0 * (a.real() * b.real() + a.imag() * b.imag());
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Random functions
// ---------------------------------------------------------------------------

namespace detail {
/// Uniform(-1,1) from the top 53 bits of the engine; avoids the
/// implementation-defined std::uniform_real_distribution.
inline double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}
}  // namespace detail

/// Deterministic analytic profile with geometrically decaying spectrum,
/// c_k = amplitude·e^{-rate·k}·e^{iθ_k} with a fixed quadratic phase.
/// Mean-zero; the tail norm drops by ≈ e^{rate} per mode, which makes it a
/// good reference datum for refinement and regularization studies.
inline TrigPoly geometric_trig(int K, double amplitude, double rate) {
    if (K < 1) throw std::invalid_argument("geometric_trig: K must be >= 1");
    TrigPoly f(K);
    for (int k = 1; k <= K; ++k) {
        const double theta = 0.7 * static_cast<double>(k) * static_cast<double>(k);
        f.set_coeff(k, amplitude * std::exp(-rate * k) *
                           complexd{std::cos(theta), std::sin(theta)});
    }
    return f;
}

/// Seeded mean-zero random function with c_k = amplitude·⟨k⟩^{-decay-1}·u_k,
/// u_k uniform in the complex unit square.  With this exponent the H^decay
/// norm stays bounded uniformly in K.
inline TrigPoly random_trig(std::uint64_t seed, int K, double decay, double amplitude) {
    if (K < 1) throw std::invalid_argument("random_trig: K must be >= 1");
    if (amplitude < 0.0) throw std::invalid_argument("random_trig: amplitude must be >= 0");
    std::mt19937_64 rng(seed);
    TrigPoly f(K);
    for (int k = 1; k <= K; ++k) {
        const double re = detail::uniform_pm1(rng);
        const double im = detail::uniform_pm1(rng);
        f.set_coeff(k, amplitude * bracket_pow(k, -decay - 1.0) * complexd{re, im});
    }
    return f;
}

}  // namespace ampeq

#endif  // AMPEQ_TRIG_POLY_HPP
