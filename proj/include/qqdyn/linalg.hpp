#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "qqdyn/errors.hpp"
#include "qqdyn/tolerances.hpp"

namespace qqdyn {

using Complex = std::complex<double>;

/// Everything here is small dense; dimensions above this are rejected.
inline constexpr int MAX_DIM = 16;

/// Dense complex vector of small fixed dimension.
class ComplexVector {
public:
    explicit ComplexVector(int dim);
    ComplexVector(std::initializer_list<Complex> entries);
    static ComplexVector from(std::vector<Complex> entries);

    int dim() const { return static_cast<int>(entries_.size()); }
    Complex& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
    const Complex& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Complex>& entries() const { return entries_; }

    double norm() const;

private:
    std::vector<Complex> entries_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);  // zero-filled
    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::span<const double> d);
    /// Throws NotSquareError unless the rows form a square matrix.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

    int dim() const { return dim_; }
    Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * dim_ + c];
    }

private:
    int dim_;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max entrywise |m - m^dag|.
double hermiticity_defect(const ComplexMatrix& m);
/// max entrywise |U^dag U - I|.
double unitarity_defect(const ComplexMatrix& u);
bool all_finite(const ComplexMatrix& m);

/// Spectral factorization of a Hermitian matrix: m = V diag(lambda) V^dag
/// with real eigenvalues in ascending order and unitary V.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;  // columns
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Deterministic for a
/// fixed input: rotations sweep (p, q) in row-major order and every
/// eigenvector is sign-fixed so that its first nonzero component has a
/// nonnegative real part (nonnegative imaginary part when the real part
/// vanishes). Throws NotHermitianError when max |m - m^dag| exceeds tol.
EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& m,
                                            double tol = HERMITICITY_TOL);

/// U = exp(-i h t) through the spectral factorization of h.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t);

/// Sum of singular values. Hermitian input reduces to the sum of
/// absolute eigenvalues; otherwise the singular values come from the
/// eigendecomposition of m^dag m.
double trace_norm(const ComplexMatrix& m);

}  // namespace qqdyn
