#include "qqdyn/coherent.hpp"

#include <cmath>

namespace qqdyn {

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_spec(const InitialStateSpec& spec) {
    for (Complex z : {spec.alpha1, spec.alpha2, spec.beta1, spec.beta2})
        if (!finite(z)) throw std::invalid_argument("non-finite coherent amplitude");
    if (!(spec.theta >= 0.0 && spec.theta < TWO_PI))
        throw std::invalid_argument("theta must lie in [0, 2*pi)");
    if (!(spec.phi >= 0.0 && spec.phi < TWO_PI))
        throw std::invalid_argument("phi must lie in [0, 2*pi)");
    if (spec.norm_const && !(*spec.norm_const > 0.0))
        throw std::invalid_argument("norm_const must be positive");
}

// Below this, the superposition is indistinguishable from exact
// cancellation (the coherent factors are unit vectors, so the terms are
// O(1) before cancelling).
constexpr double CANCEL_TOL = 1e-12;

}  // namespace

QuantumState::QuantumState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.dim() != 4)
        throw WrongDimensionError("quantum state must have 4 amplitudes");
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > STATE_NORM_TOL)
        throw NotNormalizedError("state norm " + std::to_string(n) + " is not 1");
}

ComplexVector spin_coherent_qubit(Complex alpha) {
    if (!finite(alpha)) throw std::invalid_argument("non-finite coherent amplitude");
    const double scale = 1.0 / std::sqrt(std::norm(alpha) + 1.0);
    return ComplexVector{scale, alpha * scale};
}

QuantumState initial_state(const InitialStateSpec& spec) {
    check_spec(spec);

    const ComplexVector ua = spin_coherent_qubit(spec.alpha1);
    const ComplexVector ub = spin_coherent_qubit(spec.beta1);
    const ComplexVector va = spin_coherent_qubit(spec.alpha2);
    const ComplexVector vb = spin_coherent_qubit(spec.beta2);

    const Complex w1 = std::cos(spec.theta);
    const Complex w2 = std::exp(Complex(0.0, -spec.phi)) * std::sin(spec.theta);

    ComplexVector amps(4);
    for (int qa = 0; qa < 2; ++qa)
        for (int qb = 0; qb < 2; ++qb)
            amps[2 * qa + qb] = w1 * ua[qa] * ub[qb] + w2 * va[qa] * vb[qb];

    const double raw_norm = amps.norm();
    if (raw_norm < CANCEL_TOL)
        throw ZeroStateError("the superposed product states cancel");

    // Computed normalization satisfies the unit-norm condition exactly;
    // a supplied constant is applied verbatim and then validated.
    const double norm_const = spec.norm_const ? *spec.norm_const : raw_norm * raw_norm;
    const double scale = 1.0 / std::sqrt(norm_const);
    for (int i = 0; i < 4; ++i) amps[i] *= scale;

    const double n = amps.norm();
    if (std::abs(n - 1.0) > STATE_NORM_TOL)
        throw NotNormalizedError("supplied norm_const is inconsistent: |psi| = " +
                                 std::to_string(n));
    return QuantumState(std::move(amps));
}

QuantumState substituted_state(Complex alpha, double theta, double phi) {
    return initial_state({alpha, alpha, -alpha, -alpha, theta, phi, std::nullopt});
}

ComplexMatrix density_matrix(const QuantumState& psi) {
    ComplexMatrix rho(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
    return rho;
}

}  // namespace qqdyn
