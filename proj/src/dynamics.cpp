#include "qqdyn/dynamics.hpp"

#include <cmath>
#include <utility>

namespace qqdyn {

namespace {

void check_density(const ComplexMatrix& rho) {
    if (hermiticity_defect(rho) > DENSITY_TOL)
        throw NotDensityMatrixError("density matrix is not Hermitian");
    if (std::abs(trace(rho) - Complex(1.0)) > DENSITY_TOL)
        throw NotDensityMatrixError("density matrix trace is not 1");
    const auto eig = hermitian_eigendecompose(rho, DENSITY_TOL);
    if (eig.eigenvalues.front() < -DENSITY_TOL)
        throw NotDensityMatrixError("density matrix has a negative eigenvalue");
}

}  // namespace

Propagator::Propagator(ComplexMatrix h)
    : h_(std::move(h)), eig_(hermitian_eigendecompose(h_)) {}

ComplexMatrix Propagator::at(double t) const {
    const int n = h_.dim();
    const ComplexMatrix& v = eig_.eigenvectors;
    std::vector<Complex> phases(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double arg = -eig_.eigenvalues[static_cast<std::size_t>(k)] * t;
        phases[static_cast<std::size_t>(k)] = Complex(std::cos(arg), std::sin(arg));
    }
    ComplexMatrix u(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex acc{};
            for (int k = 0; k < n; ++k)
                acc += v(r, k) * phases[static_cast<std::size_t>(k)] * std::conj(v(c, k));
            u(r, c) = acc;
        }
    return u;
}

Propagator make_propagator(const ComplexMatrix& h) { return Propagator(h); }

QuantumState evolve(const Propagator& prop, const QuantumState& psi0, double t) {
    if (prop.hamiltonian().dim() != 4)
        throw WrongDimensionError("propagator dimension must be 4 to evolve a state");
    const EigenDecomposition& eig = prop.eigensystem();
    const ComplexMatrix& v = eig.eigenvectors;

    // psi(t) = V diag(e^{-i lambda t}) V^dag psi(0)
    Complex coeff[4];
    for (int k = 0; k < 4; ++k) {
        Complex acc{};
        for (int r = 0; r < 4; ++r) acc += std::conj(v(r, k)) * psi0[r];
        const double arg = -eig.eigenvalues[static_cast<std::size_t>(k)] * t;
        coeff[k] = acc * Complex(std::cos(arg), std::sin(arg));
    }
    ComplexVector out(4);
    for (int r = 0; r < 4; ++r) {
        Complex acc{};
        for (int k = 0; k < 4; ++k) acc += v(r, k) * coeff[k];
        out[r] = acc;
    }
    return QuantumState(std::move(out));
}

ComplexMatrix evolve_density(const Propagator& prop, const ComplexMatrix& rho0, double t) {
    if (rho0.dim() != prop.hamiltonian().dim())
        throw WrongDimensionError("density matrix dimension mismatch");
    check_density(rho0);
    const ComplexMatrix u = prop.at(t);
    return u * rho0 * adjoint(u);
}

}  // namespace qqdyn
