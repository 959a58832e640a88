#include "qqdyn/closed_form.hpp"

#include <cmath>

namespace qqdyn {

ScenarioId parse_scenario_id(std::string_view name) {
    if (name == "fig1") return ScenarioId::Fig1;
    if (name == "fig2") return ScenarioId::Fig2;
    if (name == "fig3") return ScenarioId::Fig3;
    if (name == "fig4") return ScenarioId::Fig4;
    if (name == "fig5") return ScenarioId::Fig5;
    throw UnknownScenarioError("unknown scenario '" + std::string(name) +
                               "' (expected fig1..fig5)");
}

std::string to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::Fig1: return "fig1";
        case ScenarioId::Fig2: return "fig2";
        case ScenarioId::Fig3: return "fig3";
        case ScenarioId::Fig4: return "fig4";
        case ScenarioId::Fig5: return "fig5";
    }
    throw UnknownScenarioError("invalid scenario id");
}

SpinParameters scenario_parameters(ScenarioId id, double dz) {
    SpinParameters p;
    p.jx = p.jy = p.jz = 1.0;
    p.dz = 1.0;
    p.bza = p.bzb = 1.0;
    switch (id) {
        case ScenarioId::Fig1: break;
        case ScenarioId::Fig2: p.bzb = 5.0; break;
        case ScenarioId::Fig3: p.bza = 5.0; break;
        case ScenarioId::Fig4: p.jy = 2.0; p.jz = 3.0; break;
        case ScenarioId::Fig5: p.dz = dz; break;
    }
    return p;
}

namespace {

Complex cis(double arg) { return Complex(std::cos(arg), std::sin(arg)); }

const double SQRT2 = std::sqrt(2.0);

// Central 2x2 block shared by the fig1 form and (verbatim) the fig2 one.
void fill_fig1_block(ComplexMatrix& u, double t) {
    const Complex a = cis(t / 4.0 - t / SQRT2);
    const Complex b = cis(t / SQRT2 + t / 4.0);
    u(0, 0) = cis(-5.0 * t / 4.0);
    u(1, 1) = 0.5 * a + 0.5 * b;
    u(2, 2) = 0.5 * a + 0.5 * b;
    u(1, 2) = Complex(0.5, 0.5) / SQRT2 * (a - b);
    u(2, 1) = Complex(0.5, -0.5) / SQRT2 * (a - b);
    u(3, 3) = cis(3.0 * t / 4.0);
}

}  // namespace

ComplexMatrix closed_form_propagator(ScenarioId id, double t, double dz) {
    ComplexMatrix u(4);
    switch (id) {
        case ScenarioId::Fig1:
            fill_fig1_block(u, t);
            break;

        case ScenarioId::Fig2:
            // The source transcription repeats the fig1 matrix here even
            // though the fields differ; kept verbatim. Only its zero
            // pattern survives the cross-check against the spectral path.
            fill_fig1_block(u, t);
            break;

        case ScenarioId::Fig3: {
            const Complex a = cis(t / 4.0 - 3.0 * t / SQRT2);
            const Complex b = cis(3.0 * t / SQRT2 + t / 4.0);
            const double r = SQRT2 / 3.0;
            u(0, 0) = cis(-13.0 * t / 4.0);
            u(1, 1) = (0.5 + r) * a + (0.5 - r) * b;
            u(1, 2) = Complex(1.0 / 6.0, 1.0 / 6.0) / SQRT2 * (a - b);
            u(2, 1) = Complex(1.0 / 6.0, -1.0 / 6.0) / SQRT2 * (a - b);
            u(2, 2) = (0.5 - r) * a + (0.5 + r) * b;
            u(3, 3) = cis(11.0 * t / 4.0);
            break;
        }

        case ScenarioId::Fig4: {
            const double s17 = std::sqrt(17.0);
            const double s13 = std::sqrt(13.0);
            const Complex p = cis(s17 * t / 4.0 - 3.0 * t / 4.0);
            const Complex m = cis(-s17 * t / 4.0 - 3.0 * t / 4.0);
            const Complex qm = cis(3.0 * t / 4.0 - s13 * t / 4.0);
            const Complex qp = cis(s13 * t / 4.0 + 3.0 * t / 4.0);
            // (0,0) transcribed verbatim: all four terms carry the same
            // exponential, which collapses to a bare phase and breaks
            // unitarity of the row. Known transcription defect.
            u(0, 0) = 0.5 * p + 2.0 * p / s17 + 0.5 * p - 2.0 * p / s17;
            u(0, 3) = p / (2.0 * s17) - m / (2.0 * s17);
            u(1, 1) = 0.5 * qm + 0.5 * qp;
            u(1, 2) = Complex(1.5, 1.0) / s13 * (qm - qp);
            u(2, 1) = Complex(1.5, -1.0) / s13 * (qm - qp);
            u(2, 2) = 0.5 * qm + 0.5 * qp;
            u(3, 0) = p / (2.0 * s17) - m / (2.0 * s17);
            u(3, 3) = 0.5 * m - 2.0 * m / s17 + 0.5 * p + 2.0 * p / s17;
            break;
        }

        case ScenarioId::Fig5: {
            const Complex w = std::sqrt(Complex(-dz * dz - 1.0));
            const Complex i(0.0, 1.0);
            const Complex ep = std::exp(0.25 * (2.0 * w + i) * t);
            const Complex em = std::exp(0.25 * (-2.0 * w + i) * t);
            u(0, 0) = cis(-5.0 * t / 4.0);
            u(1, 1) = 0.5 * em + 0.5 * ep;
            u(2, 2) = 0.5 * em + 0.5 * ep;
            u(1, 2) = (2.0 * dz - 2.0 * i) * ep / (4.0 * w) -
                      (2.0 * dz - 2.0 * i) * em / (4.0 * w);
            u(2, 1) = (-2.0 * dz - 2.0 * i) * ep / (4.0 * w) -
                      (-2.0 * dz - 2.0 * i) * em / (4.0 * w);
            u(3, 3) = cis(3.0 * t / 4.0);
            break;
        }
    }
    return u;
}

}  // namespace qqdyn
