#include "qqdyn/spin_model.hpp"

#include <cmath>

namespace qqdyn {

namespace {

PauliBasis make_pauli_basis() {
    const Complex i(0.0, 1.0);
    PauliBasis b{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
                 ComplexMatrix::identity(2)};
    b.sigma_x(0, 1) = 1.0;
    b.sigma_x(1, 0) = 1.0;
    b.sigma_y(0, 1) = -i;
    b.sigma_y(1, 0) = i;
    b.sigma_z(0, 0) = 1.0;
    b.sigma_z(1, 1) = -1.0;
    return b;
}

void check_finite(const SpinParameters& p) {
    for (double x : {p.jx, p.jy, p.jz, p.dx, p.dy, p.dz, p.bza, p.bzb})
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite spin parameter");
}

}  // namespace

const PauliBasis& pauli_basis() {
    static const PauliBasis basis = make_pauli_basis();
    return basis;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca)
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb)
                    out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
    return out;
}

ComplexMatrix build_hamiltonian_sum(const SpinParameters& p) {
    check_finite(p);
    const PauliBasis& s = pauli_basis();
    const ComplexMatrix& x = s.sigma_x;
    const ComplexMatrix& y = s.sigma_y;
    const ComplexMatrix& z = s.sigma_z;
    const ComplexMatrix& id = s.identity2;

    ComplexMatrix h = Complex(0.5 * p.bza) * kron(z, id);
    h = h + Complex(0.5 * p.bzb) * kron(id, z);
    h = h - Complex(0.25 * p.dx) * kron(z, y);
    h = h + Complex(0.25 * p.dx) * kron(y, z);
    h = h + Complex(0.25 * p.dy) * kron(z, x);
    h = h - Complex(0.25 * p.dy) * kron(x, z);
    h = h - Complex(0.25 * p.dz) * kron(y, x);
    h = h + Complex(0.25 * p.dz) * kron(x, y);
    h = h + Complex(0.25 * p.jx) * kron(x, x);
    h = h + Complex(0.25 * p.jy) * kron(y, y);
    h = h + Complex(0.25 * p.jz) * kron(z, z);
    return h;
}

ComplexMatrix build_hamiltonian_closed(const SpinParameters& p) {
    check_finite(p);
    const Complex i(0.0, 1.0);
    ComplexMatrix h(4);

    h(0, 0) = 0.25 * (p.jz + 2.0 * (p.bza + p.bzb));
    h(0, 1) = 0.25 * (i * p.dx + p.dy);
    h(0, 2) = -0.25 * i * (p.dx - i * p.dy);
    h(0, 3) = 0.25 * (p.jx - p.jy);

    h(1, 0) = 0.25 * (p.dy - i * p.dx);
    h(1, 1) = 0.25 * (-p.jz + 2.0 * p.bza - 2.0 * p.bzb);
    h(1, 2) = 0.25 * (2.0 * i * p.dz + p.jx + p.jy);
    h(1, 3) = 0.25 * (i * p.dx + p.dy);

    h(2, 0) = 0.25 * i * (p.dx + i * p.dy);
    h(2, 1) = 0.25 * (-2.0 * i * p.dz + p.jx + p.jy);
    h(2, 2) = 0.25 * (-p.jz - 2.0 * p.bza + 2.0 * p.bzb);
    h(2, 3) = -0.25 * i * (p.dx - i * p.dy);

    h(3, 0) = 0.25 * (p.jx - p.jy);
    h(3, 1) = 0.25 * (p.dy - i * p.dx);
    h(3, 2) = 0.25 * i * (p.dx + i * p.dy);
    h(3, 3) = 0.25 * (p.jz - 2.0 * (p.bza + p.bzb));

    return h;
}

}  // namespace qqdyn
