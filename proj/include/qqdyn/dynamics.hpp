#pragma once

#include "qqdyn/coherent.hpp"
#include "qqdyn/linalg.hpp"

namespace qqdyn {

/// Time-evolution operator U(t) = exp(-i H t) for a fixed Hermitian H.
/// The eigendecomposition is computed once at construction; at(t) then
/// costs one diagonal exponential and two small matrix products.
/// Immutable after construction and safe to share across threads.
class Propagator {
public:
    explicit Propagator(ComplexMatrix h);

    const ComplexMatrix& hamiltonian() const { return h_; }
    const EigenDecomposition& eigensystem() const { return eig_; }

    ComplexMatrix at(double t) const;

private:
    ComplexMatrix h_;
    EigenDecomposition eig_;
};

Propagator make_propagator(const ComplexMatrix& h);

/// |psi(t)> = U(t) |psi(0)>, evaluated in the eigenbasis.
QuantumState evolve(const Propagator& prop, const QuantumState& psi0, double t);

/// rho(t) = U(t) rho(0) U(t)^dag. Validates that rho0 is a density
/// matrix (Hermitian, PSD and unit trace within DENSITY_TOL).
ComplexMatrix evolve_density(const Propagator& prop, const ComplexMatrix& rho0, double t);

}  // namespace qqdyn
