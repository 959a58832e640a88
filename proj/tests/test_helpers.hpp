#pragma once

// Shared generators for the property-style tests. Everything is seeded
// splitmix64, so failures reproduce exactly.

#include <cmath>

#include "qqdyn/coherent.hpp"
#include "qqdyn/linalg.hpp"
#include "qqdyn/rng.hpp"
#include "qqdyn/spin_model.hpp"

namespace qqdyn::testing {

inline ComplexMatrix random_hermitian(SplitMix64& rng, int dim, double scale = 10.0) {
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        m(r, r) = rng.uniform(-scale, scale);
        for (int c = r + 1; c < dim; ++c) {
            m(r, c) = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

inline SpinParameters random_parameters(SplitMix64& rng, double scale = 10.0) {
    SpinParameters p;
    p.jx = rng.uniform(-scale, scale);
    p.jy = rng.uniform(-scale, scale);
    p.jz = rng.uniform(-scale, scale);
    p.dx = rng.uniform(-scale, scale);
    p.dy = rng.uniform(-scale, scale);
    p.dz = rng.uniform(-scale, scale);
    p.bza = rng.uniform(-scale, scale);
    p.bzb = rng.uniform(-scale, scale);
    return p;
}

inline QuantumState random_pure_state(SplitMix64& rng) {
    ComplexVector v(4);
    double nn = 0.0;
    while (nn < 1e-6) {  // reject the measure-zero near-null draw
        for (int i = 0; i < 4; ++i)
            v[i] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        nn = v.norm();
    }
    for (int i = 0; i < 4; ++i) v[i] /= nn;
    return QuantumState(std::move(v));
}

/// Random single-qubit density matrix (mixture of two pure states).
inline ComplexMatrix random_qubit_density(SplitMix64& rng) {
    ComplexMatrix rho(2);
    double weight = rng.uniform(0.0, 1.0);
    for (int term = 0; term < 2; ++term) {
        Complex a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        Complex b(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const double nn = std::sqrt(std::norm(a) + std::norm(b));
        a /= nn;
        b /= nn;
        const double w = term == 0 ? weight : 1.0 - weight;
        rho(0, 0) += w * a * std::conj(a);
        rho(0, 1) += w * a * std::conj(b);
        rho(1, 0) += w * b * std::conj(a);
        rho(1, 1) += w * b * std::conj(b);
    }
    return rho;
}

/// SWAP permutation on the two-qubit basis (exchanges |01> and |10>).
inline ComplexMatrix swap_gate() {
    ComplexMatrix s(4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

}  // namespace qqdyn::testing
