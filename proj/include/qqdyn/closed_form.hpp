#pragma once

#include <string>
#include <string_view>

#include "qqdyn/linalg.hpp"
#include "qqdyn/spin_model.hpp"

namespace qqdyn {

/// The five bundled scenarios (figure presets).
enum class ScenarioId { Fig1, Fig2, Fig3, Fig4, Fig5 };

/// Accepts "fig1" .. "fig5"; throws UnknownScenarioError otherwise.
ScenarioId parse_scenario_id(std::string_view name);
std::string to_string(ScenarioId id);

/// Couplings for a scenario. dz applies to Fig5 only; the other
/// scenarios pin dz = 1.
SpinParameters scenario_parameters(ScenarioId id, double dz = 1.0);

/// Hand-transcribed analytic propagator for one scenario, kept verbatim
/// from the source derivation as an independent cross-check of the
/// spectral path. Some transcribed entries are known to be defective;
/// compare_closed_form() in scenario.hpp measures and reports which.
/// Never used by the production evolution path. For Fig5 the square
/// root of -(dz^2 + 1) is taken on the principal complex branch.
ComplexMatrix closed_form_propagator(ScenarioId id, double t, double dz = 1.0);

}  // namespace qqdyn
