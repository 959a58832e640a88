#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qqdyn/linalg.hpp"
#include "qqdyn/rng.hpp"
#include "qqdyn/spin_model.hpp"
#include "test_helpers.hpp"

using namespace qqdyn;
using testing::random_hermitian;

namespace {

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
    const int n = eig.eigenvectors.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex acc{};
            for (int k = 0; k < n; ++k)
                acc += eig.eigenvectors(r, k) * eig.eigenvalues[static_cast<std::size_t>(k)] *
                       std::conj(eig.eigenvectors(c, k));
            out(r, c) = acc;
        }
    return out;
}

}  // namespace

TEST_CASE("identity eigendecomposition") {
    const auto eig = hermitian_eigendecompose(ComplexMatrix::identity(4));
    for (double lambda : eig.eigenvalues) CHECK(lambda == doctest::Approx(1.0).epsilon(0));
    CHECK(max_abs_diff(eig.eigenvectors, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("diagonal eigenvalues come out ascending") {
    const double d[] = {3.0, -1.0, 2.0, 0.0};
    const auto eig = hermitian_eigendecompose(ComplexMatrix::diagonal(d));
    const std::vector<double> expected = {-1.0, 0.0, 2.0, 3.0};
    CHECK(eig.eigenvalues == expected);
    // columns are the matching basis vectors with positive sign
    CHECK(eig.eigenvectors(1, 0) == Complex(1.0));
    CHECK(eig.eigenvectors(3, 1) == Complex(1.0));
    CHECK(eig.eigenvectors(2, 2) == Complex(1.0));
    CHECK(eig.eigenvectors(0, 3) == Complex(1.0));
}

TEST_CASE("pauli x spectrum") {
    const auto eig = hermitian_eigendecompose(pauli_basis().sigma_x);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    // sign convention: leading component real-positive
    CHECK(std::abs(eig.eigenvectors(0, 0) - Complex(inv_sqrt2)) < 1e-12);
    CHECK(std::abs(eig.eigenvectors(1, 0) - Complex(-inv_sqrt2)) < 1e-12);
    CHECK(std::abs(eig.eigenvectors(0, 1) - Complex(inv_sqrt2)) < 1e-12);
    CHECK(std::abs(eig.eigenvectors(1, 1) - Complex(inv_sqrt2)) < 1e-12);
}

TEST_CASE("rejects non-hermitian and non-square input") {
    ComplexMatrix m(2);
    m(0, 1) = Complex(1.0, 0.0);
    m(1, 0) = Complex(2.0, 0.0);
    CHECK_THROWS_AS(hermitian_eigendecompose(m), NotHermitianError);
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), NotSquareError);
    CHECK_THROWS_AS(
        ComplexMatrix::from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}}),
        NotSquareError);
}

TEST_CASE("reconstruction and unitarity over random hermitian matrices") {
    SplitMix64 rng(101);
    double worst_rec = 0.0;
    double worst_unit = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix h = random_hermitian(rng, 4);
        const auto eig = hermitian_eigendecompose(h);
        worst_rec = std::max(worst_rec, max_abs_diff(reconstruct(eig), h));
        worst_unit = std::max(worst_unit, unitarity_defect(eig.eigenvectors));
        for (std::size_t k = 1; k < eig.eigenvalues.size(); ++k)
            CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
    }
    CHECK(worst_rec < 1e-11);
    CHECK(worst_unit < 1e-12);
}

TEST_CASE("eigendecomposition is deterministic") {
    SplitMix64 rng(7);
    const ComplexMatrix h = random_hermitian(rng, 4);
    const auto a = hermitian_eigendecompose(h);
    const auto b = hermitian_eigendecompose(h);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
    // sign convention on every column
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            const Complex z = a.eigenvectors(k, j);
            if (std::abs(z) <= 1e-12) continue;
            CHECK(z.real() >= 0.0);
            break;
        }
    }
}

TEST_CASE("unitary_exp at t = 0 is the identity") {
    SplitMix64 rng(13);
    const ComplexMatrix h = random_hermitian(rng, 4);
    CHECK(max_abs_diff(unitary_exp(h, 0.0), ComplexMatrix::identity(4)) < 1e-14);
}

TEST_CASE("unitary_exp of the fig1 couplings matches the reference matrix at t = 1") {
    // Frozen from an independent scalar evaluation of the analytic form.
    SpinParameters p;
    p.jx = p.jy = p.jz = 1.0;
    p.dz = 1.0;
    p.bza = p.bzb = 1.0;
    const ComplexMatrix u = unitary_exp(build_hamiltonian_sum(p), 1.0);

    ComplexMatrix expected(4);
    expected(0, 0) = Complex(0.3153223623952687, -0.9489846193555862);
    expected(1, 1) = Complex(0.7366104336449822, 0.18808752331837042);
    expected(1, 2) = Complex(0.5587303584878867, -0.33143406451556906);
    expected(2, 1) = Complex(-0.33143406451556906, -0.5587303584878867);
    expected(2, 2) = Complex(0.7366104336449822, 0.18808752331837042);
    expected(3, 3) = Complex(0.7316888688738209, 0.6816387600233341);
    CHECK(max_abs_diff(u, expected) < 1e-10);
    // the corner phase e^{-5it/4} directly
    CHECK(std::abs(u(0, 0) - std::exp(Complex(0.0, -1.25))) < 1e-12);
}

TEST_CASE("unitary_exp stays unitary over long times") {
    SplitMix64 rng(17);
    const ComplexMatrix h = random_hermitian(rng, 4, 2.0);
    for (double t : {-100.0, -31.7, -1.0, 0.5, 3.0, 47.0, 100.0})
        CHECK(unitarity_defect(unitary_exp(h, t)) < 1e-12);
}

TEST_CASE("unitary_exp group property") {
    SplitMix64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix h = random_hermitian(rng, 4, 2.0);
        const double t1 = rng.uniform(-10.0, 10.0);
        const double t2 = rng.uniform(-10.0, 10.0);
        const ComplexMatrix lhs = unitary_exp(h, t1 + t2);
        const ComplexMatrix rhs = unitary_exp(h, t1) * unitary_exp(h, t2);
        CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("trace norm basics") {
    CHECK(trace_norm(ComplexMatrix::identity(4)) == doctest::Approx(4.0).epsilon(1e-14));
    const double d[] = {0.5, 0.5, 0.5, -0.5};
    CHECK(trace_norm(ComplexMatrix::diagonal(d)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("trace norm of a density matrix is 1") {
    SplitMix64 rng(29);
    for (int i = 0; i < 20; ++i) {
        const QuantumState psi = testing::random_pure_state(rng);
        ComplexMatrix rho(4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
        CHECK(trace_norm(rho) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("trace norm of non-hermitian input uses singular values") {
    ComplexMatrix shift(4);
    shift(0, 1) = 1.0;
    shift(1, 2) = 1.0;
    shift(2, 3) = 1.0;
    CHECK(trace_norm(shift) == doctest::Approx(3.0).epsilon(1e-12));

    ComplexMatrix nil(2);
    nil(0, 1) = Complex(0.0, 2.0);
    CHECK(trace_norm(nil) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace norm is invariant under unitary conjugation") {
    SplitMix64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix m = random_hermitian(rng, 4);
        const ComplexMatrix u = unitary_exp(random_hermitian(rng, 4, 1.0), 1.0);
        const double direct = trace_norm(m);
        const double rotated = trace_norm(u * m * adjoint(u));
        CHECK(std::abs(direct - rotated) < 1e-10);
    }
}

TEST_CASE("vector and matrix plumbing") {
    const ComplexVector v{1.0, Complex(0.0, 2.0)};
    CHECK(v.norm() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(inner(v, v).real() == doctest::Approx(5.0).epsilon(1e-15));

    CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(17), std::invalid_argument);

    ComplexMatrix nan_mat(2);
    nan_mat(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(hermitian_eigendecompose(nan_mat), std::invalid_argument);
}
