#pragma once

#include "qqdyn/linalg.hpp"

namespace qqdyn {

/// Physical couplings of the two-qubit model: exchange constants,
/// Dzyaloshinskii-Moriya vector and per-qubit z magnetic fields.
/// Units are hbar = 1 with dimensionless time.
struct SpinParameters {
    double jx = 0, jy = 0, jz = 0;
    double dx = 0, dy = 0, dz = 0;
    double bza = 0, bzb = 0;

    bool isotropic() const { return jx == jy && jy == jz; }
};

/// 2x2 Pauli constants with sigma_z = diag(+1, -1) and
/// sigma_y = ((0, -i), (i, 0)).
struct PauliBasis {
    ComplexMatrix sigma_x, sigma_y, sigma_z, identity2;
};

const PauliBasis& pauli_basis();

/// Kronecker product. The left factor acts on the slow index, so two
/// qubit factors produce the basis order |00>, |01>, |10>, |11> with
/// qubit a on the left.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hamiltonian assembled term by term from Pauli tensor products.
/// Hermitian with exactly real diagonal by construction.
ComplexMatrix build_hamiltonian_sum(const SpinParameters& p);

/// The same Hamiltonian written entry by entry as an explicit 4x4
/// matrix. Kept as an independent second route; the two builders must
/// agree entrywise and the test suite enforces that.
ComplexMatrix build_hamiltonian_closed(const SpinParameters& p);

}  // namespace qqdyn
