#include "qqdyn/entanglement.hpp"

#include <cmath>

#include "qqdyn/dynamics.hpp"

namespace qqdyn {

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem sub) {
    if (rho.dim() != 4)
        throw WrongDimensionError("partial transpose is defined on 4x4 matrices");
    ComplexMatrix out(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp) {
                    if (sub == Subsystem::QubitB)
                        out(2 * a + b, 2 * ap + bp) = rho(2 * a + bp, 2 * ap + b);
                    else
                        out(2 * a + b, 2 * ap + bp) = rho(2 * ap + b, 2 * a + bp);
                }
    return out;
}

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

double negativity(const ComplexMatrix& rho, Subsystem sub) {
    if (rho.dim() != 4)
        throw WrongDimensionError("negativity is defined on 4x4 density matrices");
    check_density(rho);
    const double raw = 0.5 * (trace_norm(partial_transpose(rho, sub)) - 1.0);
    return raw < NEGATIVITY_FLOOR ? 0.0 : raw;
}

double pure_state_negativity_oracle(const QuantumState& psi) {
    return std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

NegativitySeries negativity_series(const SpinParameters& params,
                                   const InitialStateSpec& spec, double t_max,
                                   int n_steps, Subsystem sub) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
    if (n_steps < 2) throw std::invalid_argument("n_steps must be at least 2");

    const Propagator prop(build_hamiltonian_sum(params));
    const QuantumState psi0 = initial_state(spec);

    NegativitySeries out;
    out.params = params;
    out.state_spec = spec;
    out.times.reserve(static_cast<std::size_t>(n_steps));
    out.values.reserve(static_cast<std::size_t>(n_steps));
    for (int k = 0; k < n_steps; ++k) {
        const double t = t_max * static_cast<double>(k) / (n_steps - 1);
        const QuantumState psi = evolve(prop, psi0, t);
        out.times.push_back(t);
        out.values.push_back(negativity(density_matrix(psi), sub));
    }
    return out;
}

namespace {

double trapezoid_average(const NegativitySeries& s, std::size_t i_lo, std::size_t i_hi) {
    const std::size_t n = i_hi - i_lo + 1;
    double acc = 0.5 * (s.values[i_lo] + s.values[i_hi]);
    for (std::size_t k = i_lo + 1; k < i_hi; ++k) acc += s.values[k];
    return acc / static_cast<double>(n - 1);
}

}  // namespace

double time_average(const NegativitySeries& series) {
    if (series.times.size() < 2 || series.times.size() != series.values.size())
        throw std::invalid_argument("series needs at least two aligned samples");
    return trapezoid_average(series, 0, series.times.size() - 1);
}

double time_average(const NegativitySeries& series, double t_lo, double t_hi) {
    if (series.times.size() < 2 || series.times.size() != series.values.size())
        throw std::invalid_argument("series needs at least two aligned samples");
    if (!(t_lo < t_hi)) throw std::invalid_argument("window must satisfy t_lo < t_hi");

    const double eps = 1e-9 * (series.times.back() - series.times.front());
    std::size_t i_lo = 0;
    while (i_lo < series.times.size() && series.times[i_lo] < t_lo - eps) ++i_lo;
    std::size_t i_hi = series.times.size();
    while (i_hi > 0 && series.times[i_hi - 1] > t_hi + eps) --i_hi;
    if (i_hi == 0 || i_lo >= i_hi - 1)
        throw std::invalid_argument("window covers fewer than two grid points");
    return trapezoid_average(series, i_lo, i_hi - 1);
}

}  // namespace qqdyn
