#pragma once

#include <vector>

#include "qqdyn/coherent.hpp"
#include "qqdyn/linalg.hpp"
#include "qqdyn/spin_model.hpp"

namespace qqdyn {

enum class Subsystem { QubitA, QubitB };

/// Transpose of one qubit's indices only. For QubitB every 2x2 block is
/// transposed in place; for QubitA the block grid itself is transposed.
/// Requires a 4x4 input (WrongDimensionError otherwise); preserves the
/// trace and maps Hermitian to Hermitian.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem sub);

/// N(rho) = (||rho^{T_sub}||_1 - 1) / 2, clamped at zero. In [0, 1/2]
/// for two qubits; values below NEGATIVITY_FLOOR are round-off of the
/// trace norm and are reported as exactly 0. Throws
/// NotDensityMatrixError unless rho is Hermitian, PSD and unit-trace
/// within DENSITY_TOL.
double negativity(const ComplexMatrix& rho, Subsystem sub);

/// Independent cross-check for pure states: |c00 c11 - c01 c10|, half
/// the concurrence, which equals the negativity of |psi><psi|.
double pure_state_negativity_oracle(const QuantumState& psi);

/// Negativity sampled on a uniform time grid, together with the inputs
/// that produced it.
struct NegativitySeries {
    std::vector<double> times;
    std::vector<double> values;
    SpinParameters params;
    InitialStateSpec state_spec;
};

/// Samples negativity(rho(t_k)) on t_k = k * t_max / (n_steps - 1).
NegativitySeries negativity_series(const SpinParameters& params,
                                   const InitialStateSpec& spec, double t_max,
                                   int n_steps, Subsystem sub);

/// Trapezoid-rule time average over the full grid.
double time_average(const NegativitySeries& series);

/// Same, restricted to grid points with t_lo <= t <= t_hi.
double time_average(const NegativitySeries& series, double t_lo, double t_hi);

}  // namespace qqdyn
