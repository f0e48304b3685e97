// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's own algebra:
//  - nodal_product: pointwise multiplication on an alias-free grid
//  - quadrature_inner: trapezoid-free exact quadrature of (1/2π)∫fg
//  - max_abs_node / rel_nodal_distance: grid-based sup norms
// These deliberately go through sample space, so they cross-check the
// coefficient-side convolution arithmetic.

#ifndef AMPEQ_TEST_ORACLES_HPP
#define AMPEQ_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>

#include "ampeq/trig_poly.hpp"

namespace oracle {

/// Product of two TrigPolys computed entirely in sample space on a grid
/// large enough that no aliasing can occur, then re-analyzed.
inline ampeq::TrigPoly nodal_product(const ampeq::TrigPoly& f, const ampeq::TrigPoly& g) {
    const int Kout = f.max_mode() + g.max_mode();
    const int M = 2 * (2 * Kout + 1);
    const ampeq::SampleGrid sf = ampeq::synthesize(f, M);
    const ampeq::SampleGrid sg = ampeq::synthesize(g, M);
    ampeq::SampleGrid prod;
    prod.values.resize(sf.values.size());
    for (std::size_t j = 0; j < sf.values.size(); ++j)
        prod.values[j] = sf.values[j] * sg.values[j];
    return ampeq::analyze(prod, Kout);
}

/// (1/2π)∫ f·g dx by uniform-node quadrature on an alias-free grid
/// (exact for trigonometric polynomials up to rounding).
inline double quadrature_inner(const ampeq::TrigPoly& f, const ampeq::TrigPoly& g) {
    const int M = 2 * (f.max_mode() + g.max_mode()) + 2;
    const ampeq::SampleGrid sf = ampeq::synthesize(f, M);
    const ampeq::SampleGrid sg = ampeq::synthesize(g, M);
    double acc = 0.0;
    for (std::size_t j = 0; j < sf.values.size(); ++j) acc += sf.values[j] * sg.values[j];
    return acc / static_cast<double>(M);
}

/// sup-norm over a 4x-oversampled node set.
inline double max_abs_node(const ampeq::TrigPoly& f) {
    const int M = 4 * (2 * f.max_mode() + 1);
    const ampeq::SampleGrid s = ampeq::synthesize(f, M);
    double m = 0.0;
    for (double v : s.values) m = std::max(m, std::abs(v));
    return m;
}

/// max_j |f - g| at common nodes.
inline double nodal_distance(const ampeq::TrigPoly& f, const ampeq::TrigPoly& g) {
    return max_abs_node(f - g);
}

/// Coefficient-wise max |f̂(k) - ĝ(k)|.
inline double coeff_distance(const ampeq::TrigPoly& f, const ampeq::TrigPoly& g) {
    double m = 0.0;
    const int K = std::max(f.max_mode(), g.max_mode());
    for (int k = 0; k <= K; ++k) m = std::max(m, std::abs(f.coeff(k) - g.coeff(k)));
    return m;
}

}  // namespace oracle

#endif
