#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qqdyn/spin_model.hpp"
#include "test_helpers.hpp"

using namespace qqdyn;
using testing::random_parameters;

TEST_CASE("pauli constants") {
    const PauliBasis& s = pauli_basis();
    for (const ComplexMatrix* m : {&s.sigma_x, &s.sigma_y, &s.sigma_z}) {
        CHECK(hermiticity_defect(*m) == 0.0);
        CHECK(trace(*m) == Complex(0.0));
        CHECK(unitarity_defect(*m) < 1e-15);
    }
    CHECK(s.sigma_z(0, 0) == Complex(1.0));
    CHECK(s.sigma_z(1, 1) == Complex(-1.0));
    CHECK(s.sigma_y(0, 1) == Complex(0.0, -1.0));
    CHECK(s.sigma_y(1, 0) == Complex(0.0, 1.0));
}

TEST_CASE("kron basics") {
    const PauliBasis& s = pauli_basis();
    CHECK(max_abs_diff(kron(s.identity2, s.identity2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix za = kron(s.sigma_z, s.identity2);
    const double expected_z[] = {1.0, 1.0, -1.0, -1.0};
    CHECK(max_abs_diff(za, ComplexMatrix::diagonal(expected_z)) == 0.0);

    const ComplexMatrix xx = kron(s.sigma_x, s.sigma_x);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0));
}

TEST_CASE("zero parameters give the zero hamiltonian") {
    const SpinParameters p;
    CHECK(max_abs(build_hamiltonian_sum(p)) == 0.0);
    CHECK(max_abs(build_hamiltonian_closed(p)) == 0.0);
}

TEST_CASE("reference entries of the closed build") {
    SpinParameters p;
    p.jx = p.jy = p.jz = 1.0;
    p.bza = p.bzb = 1.0;
    p.dz = 1.0;
    for (const ComplexMatrix& h : {build_hamiltonian_sum(p), build_hamiltonian_closed(p)}) {
        CHECK(h(0, 0) == Complex(1.25));
        CHECK(std::abs(h(1, 2) - Complex(0.5, 0.5)) == 0.0);
    }

    SpinParameters corner;
    corner.jx = 1.0;
    corner.jy = 2.0;
    for (const ComplexMatrix& h :
         {build_hamiltonian_sum(corner), build_hamiltonian_closed(corner)}) {
        CHECK(h(0, 3) == Complex(-0.25));
        CHECK(h(3, 0) == Complex(-0.25));
    }

    SpinParameters fig4;
    fig4.jx = 1.0;
    fig4.jy = 2.0;
    fig4.jz = 3.0;
    fig4.bza = fig4.bzb = 1.0;
    fig4.dz = 1.0;
    CHECK(build_hamiltonian_closed(fig4)(0, 0) == Complex(1.75));

    SpinParameters fig2;
    fig2.jx = fig2.jy = fig2.jz = 1.0;
    fig2.bza = 1.0;
    fig2.bzb = 5.0;
    fig2.dz = 1.0;
    CHECK(build_hamiltonian_closed(fig2)(1, 1) == Complex(-2.25));
}

TEST_CASE("the two builders agree entrywise") {
    SplitMix64 rng(41);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const SpinParameters p = random_parameters(rng);
        worst = std::max(
            worst, max_abs_diff(build_hamiltonian_sum(p), build_hamiltonian_closed(p)));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("hamiltonian is exactly hermitian with real diagonal") {
    SplitMix64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const ComplexMatrix h = build_hamiltonian_sum(random_parameters(rng));
        for (int r = 0; r < 4; ++r) {
            CHECK(h(r, r).imag() == 0.0);
            for (int c = 0; c < 4; ++c) CHECK(h(r, c) == std::conj(h(c, r)));
        }
    }
}

TEST_CASE("block structure in the symmetric-exchange case") {
    SplitMix64 rng(47);
    for (int i = 0; i < 100; ++i) {
        SpinParameters p = random_parameters(rng);
        p.dx = p.dy = 0.0;
        p.jy = p.jx;
        const ComplexMatrix h = build_hamiltonian_sum(p);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                if (r == c) continue;
                if ((r == 1 && c == 2) || (r == 2 && c == 1)) continue;
                CHECK(h(r, c) == Complex(0.0));
            }
    }
}

TEST_CASE("qubit swap covariance") {
    SplitMix64 rng(53);
    const ComplexMatrix swap = testing::swap_gate();
    for (int i = 0; i < 500; ++i) {
        const SpinParameters p = random_parameters(rng);
        SpinParameters q = p;
        std::swap(q.bza, q.bzb);
        q.dx = -q.dx;
        q.dy = -q.dy;
        q.dz = -q.dz;
        const ComplexMatrix lhs = swap * build_hamiltonian_sum(p) * swap;
        CHECK(max_abs_diff(lhs, build_hamiltonian_sum(q)) < 1e-14);
    }
}

TEST_CASE("isotropic predicate") {
    SpinParameters p;
    p.jx = p.jy = p.jz = 2.5;
    CHECK(p.isotropic());
    p.jz = 2.5 + 1e-15;
    CHECK_FALSE(p.isotropic());
}

TEST_CASE("non-finite parameters are rejected") {
    SpinParameters p;
    p.jx = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(build_hamiltonian_sum(p), std::invalid_argument);
    CHECK_THROWS_AS(build_hamiltonian_closed(p), std::invalid_argument);
}
