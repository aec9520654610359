#pragma once

// Named measurement configurations for the singlet experiments, plus the
// custom (user-supplied) configuration.

#include <optional>
#include <string>
#include <vector>

#include "interlink/correlations.hpp"
#include "interlink/observables.hpp"
#include "interlink/states.hpp"
#include "json.hpp"

namespace interlink {

enum class Scenario { KsCollinear, KsMixed, Dim4CollinearC, Dim4CollinearCprime, Dim4Mixed, Custom };

// Accepts the canonical names plus the aliases "fig1" (ks-mixed) and "fig2"
// (dim4-mixed). Throws ValidationError for anything else.
Scenario parse_scenario(const std::string& name);
std::string scenario_name(Scenario s);
std::size_t scenario_dim(Scenario s);

struct ScenarioConfig {
  Scenario scenario = Scenario::KsMixed;
  std::optional<std::vector<double>> left_spectrum;
  std::optional<std::vector<double>> right_spectrum;
  // Required for Scenario::Custom; see docs/file-formats.md.
  std::optional<nlohmann::json> custom;
};

struct Setup {
  Scenario scenario;
  ContextOperator left;
  ContextOperator right;
  BipartiteState state;
  std::string state_tag;
  // Cells the quantum prediction leaves empty. Named scenarios fix these;
  // custom configurations supply them explicitly or leave them unset.
  std::optional<std::vector<Cell>> forbidden;
  // Closed-form Tr{rho (A (x) B)} for named scenarios.
  std::optional<double> closed_form;
};

Setup build_setup(const ScenarioConfig& config);

// Closed-form expectation for a named scenario given both spectra.
std::optional<double> closed_form_expectation(Scenario s, const std::vector<double>& left,
                                              const std::vector<double>& right);

// The two contexts whose diagram the scenario describes.
std::vector<ContextOperator> scenario_contexts(const Setup& setup);

// Default spectra: (1,2,3)/(4,5,6) in three dimensions, (1,2,3,4)/(5,6,7,8) in four.
std::vector<double> default_left_spectrum(std::size_t dim);
std::vector<double> default_right_spectrum(std::size_t dim);

// Parses "[[re, im], ...]" (or plain reals) into a vector.
ComplexVector vector_from_json(const nlohmann::json& j);

}  // namespace interlink
