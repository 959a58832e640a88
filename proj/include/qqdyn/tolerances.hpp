#pragma once

// Central numeric tolerances. Keeping them in one place gives the
// validation layers and the test suites a single tuning point.
namespace qqdyn {

/// Max entrywise |M - M^dag| accepted as Hermitian.
inline constexpr double HERMITICITY_TOL = 1e-10;

/// Max entrywise |U^dag U - I| accepted as unitary.
inline constexpr double UNITARITY_TOL = 1e-12;

/// PSD / unit-trace slack accepted for density matrices.
inline constexpr double DENSITY_TOL = 1e-10;

/// Accepted deviation from unit norm for states built with a supplied
/// normalization constant.
inline constexpr double STATE_NORM_TOL = 1e-9;

/// Negativity values below this are trace-norm round-off and are
/// reported as exactly zero.
inline constexpr double NEGATIVITY_FLOOR = 1e-13;

/// Jacobi sweep stopping rule: off-diagonal Frobenius mass relative to
/// the total Frobenius mass of the matrix.
inline constexpr double JACOBI_OFF_RATIO = 1e-28;

}  // namespace qqdyn
