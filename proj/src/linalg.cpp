#include "qqdyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace qqdyn {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > MAX_DIM)
        throw std::invalid_argument("dimension must be in [1, " +
                                    std::to_string(MAX_DIM) + "], got " +
                                    std::to_string(dim));
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexVector::ComplexVector(int dim) {
    check_dim(dim);
    entries_.assign(static_cast<std::size_t>(dim), Complex{});
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : entries_(entries) {
    check_dim(dim());
}

ComplexVector ComplexVector::from(std::vector<Complex> entries) {
    ComplexVector v(static_cast<int>(entries.size()));
    v.entries_ = std::move(entries);
    return v;
}

double ComplexVector::norm() const {
    double acc = 0.0;
    for (const Complex& z : entries_) acc += std::norm(z);
    return std::sqrt(acc);
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner product of mismatched dimensions");
    Complex acc{};
    for (int i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    a_.assign(static_cast<std::size_t>(dim) * dim, Complex{});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int n = static_cast<int>(rows.size());
    check_dim(n);
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw NotSquareError("matrix rows must all have length " + std::to_string(n));
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in +");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in -");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in *");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = s * m(r, c);
    return out;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in matvec");
    ComplexVector out(v.dim());
    for (int r = 0; r < m.dim(); ++r) {
        Complex acc{};
        for (int c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = std::conj(m(c, r));
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = m(c, r);
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex acc{};
    for (int i = 0; i < m.dim(); ++i) acc += m(i, i);
    return acc;
}

double max_abs(const ComplexMatrix& m) {
    double worst = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in max_abs_diff");
    double worst = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = r; c < m.dim(); ++c)
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    return worst;
}

double unitarity_defect(const ComplexMatrix& u) {
    return max_abs_diff(adjoint(u) * u, ComplexMatrix::identity(u.dim()));
}

bool all_finite(const ComplexMatrix& m) {
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (!finite(m(r, c))) return false;
    return true;
}

namespace {

double frobenius_sq(const ComplexMatrix& m) {
    double acc = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) acc += std::norm(m(r, c));
    return acc;
}

double off_diagonal_sq(const ComplexMatrix& m) {
    double acc = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (r != c) acc += std::norm(m(r, c));
    return acc;
}

// Leading entry of a unit-norm column is at least 1/sqrt(MAX_DIM), so
// this threshold always finds one.
constexpr double LEAD_TOL = 1e-12;

}  // namespace

EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& m, double tol) {
    const int n = m.dim();
    if (!all_finite(m)) throw std::invalid_argument("non-finite matrix entry");
    const double defect = hermiticity_defect(m);
    if (defect > tol)
        throw NotHermitianError("hermiticity defect " + std::to_string(defect) +
                                " exceeds tolerance");

    // Work on the exactly hermitized copy; the admitted defect is folded in.
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double total = frobenius_sq(a);

    if (total > 0.0) {
        constexpr int MAX_SWEEPS = 60;
        bool converged = false;
        for (int sweep = 0; sweep < MAX_SWEEPS; ++sweep) {
            if (off_diagonal_sq(a) <= JACOBI_OFF_RATIO * total) {
                converged = true;
                break;
            }
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const Complex apq = a(p, q);
                    const double b = std::abs(apq);
                    if (b == 0.0) continue;
                    const Complex conj_phase = std::conj(apq) / b;  // e^{-i phi}
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (aqq - app) / (2.0 * b);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::hypot(1.0, tau));
                    const double c = 1.0 / std::hypot(1.0, t);
                    const double s = t * c;
                    const Complex sp = s * conj_phase;
                    const Complex cp = c * conj_phase;

                    // A <- G^dag A G with G(p,p) = c, G(p,q) = s,
                    // G(q,p) = -s e^{-i phi}, G(q,q) = c e^{-i phi}.
                    for (int k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        const Complex akp = a(k, p);
                        const Complex akq = a(k, q);
                        a(k, p) = c * akp - sp * akq;
                        a(k, q) = s * akp + cp * akq;
                        a(p, k) = std::conj(a(k, p));
                        a(q, k) = std::conj(a(k, q));
                    }
                    a(p, p) = app - t * b;
                    a(q, q) = aqq + t * b;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;

                    for (int k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = c * vkp - sp * vkq;
                        v(k, q) = s * vkp + cp * vkq;
                    }
                }
            }
        }
        if (!converged && off_diagonal_sq(a) > JACOBI_OFF_RATIO * total)
            throw Error("jacobi eigensolver did not converge");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(n)),
                           ComplexMatrix(n)};
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        out.eigenvalues[static_cast<std::size_t>(j)] = a(src, src).real();

        double flip = 1.0;
        for (int k = 0; k < n; ++k) {
            const Complex z = v(k, src);
            if (std::abs(z) <= LEAD_TOL) continue;
            if (z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0)) flip = -1.0;
            break;
        }
        for (int k = 0; k < n; ++k) out.eigenvectors(k, j) = flip * v(k, src);
    }
    return out;
}

namespace {

ComplexMatrix exp_from_eigensystem(const EigenDecomposition& eig, double t) {
    const int n = eig.eigenvectors.dim();
    std::vector<Complex> phases(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double arg = -eig.eigenvalues[static_cast<std::size_t>(k)] * t;
        phases[static_cast<std::size_t>(k)] = Complex(std::cos(arg), std::sin(arg));
    }
    const ComplexMatrix& v = eig.eigenvectors;
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

}  // namespace

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t) {
    return exp_from_eigensystem(hermitian_eigendecompose(h), t);
}

double trace_norm(const ComplexMatrix& m) {
    if (hermiticity_defect(m) <= HERMITICITY_TOL) {
        const auto eig = hermitian_eigendecompose(m);
        double acc = 0.0;
        for (double lambda : eig.eigenvalues) acc += std::abs(lambda);
        return acc;
    }
    // Singular values via the Hermitian PSD product m^dag m.
    const auto eig = hermitian_eigendecompose(adjoint(m) * m);
    double acc = 0.0;
    for (double lambda : eig.eigenvalues) acc += std::sqrt(std::max(0.0, lambda));
    return acc;
}

}  // namespace qqdyn
