#pragma once

#include <optional>

#include "qqdyn/linalg.hpp"

namespace qqdyn {

/// Parameters of the superposed two-qubit spin-coherent initial state.
/// The state is cos(theta) |alpha1> x |beta1> + e^{-i phi} sin(theta)
/// |alpha2> x |beta2|, divided by sqrt(norm_const). When norm_const is
/// absent it is computed from the unit-norm condition; when supplied it
/// is used verbatim and the result is validated.
struct InitialStateSpec {
    Complex alpha1, alpha2, beta1, beta2;
    double theta = 0.0;  // [0, 2*pi)
    double phi = 0.0;    // [0, 2*pi)
    std::optional<double> norm_const;
};

/// Unit-norm four-component pure state, amplitudes ordered
/// (c00, c01, c10, c11).
class QuantumState {
public:
    explicit QuantumState(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const { return amps_; }
    const Complex& operator[](int i) const { return amps_[i]; }

private:
    ComplexVector amps_;
};

/// (|0> + alpha |1>) / sqrt(|alpha|^2 + 1).
ComplexVector spin_coherent_qubit(Complex alpha);

/// Throws ZeroStateError when the two product terms cancel and
/// NotNormalizedError when a supplied norm_const is inconsistent with
/// the unit-norm condition.
QuantumState initial_state(const InitialStateSpec& spec);

/// One-parameter family alpha1 = alpha2 = alpha, beta1 = beta2 = -alpha
/// with computed normalization. Always a product state at t = 0.
QuantumState substituted_state(Complex alpha, double theta, double phi);

/// rho = |psi><psi|.
ComplexMatrix density_matrix(const QuantumState& psi);

}  // namespace qqdyn
