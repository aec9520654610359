#include "interlink/scenarios.hpp"

#include <algorithm>

#include "interlink/errors.hpp"

namespace interlink {

using nlohmann::json;

Scenario parse_scenario(const std::string& name) {
  if (name == "ks-collinear") return Scenario::KsCollinear;
  if (name == "ks-mixed" || name == "fig1") return Scenario::KsMixed;
  if (name == "dim4-collinear-C") return Scenario::Dim4CollinearC;
  if (name == "dim4-collinear-Cprime") return Scenario::Dim4CollinearCprime;
  if (name == "dim4-mixed" || name == "fig2") return Scenario::Dim4Mixed;
  if (name == "custom") return Scenario::Custom;
  throw ValidationError("unknown scenario '" + name + "'");
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::KsCollinear:
      return "ks-collinear";
    case Scenario::KsMixed:
      return "ks-mixed";
    case Scenario::Dim4CollinearC:
      return "dim4-collinear-C";
    case Scenario::Dim4CollinearCprime:
      return "dim4-collinear-Cprime";
    case Scenario::Dim4Mixed:
      return "dim4-mixed";
    case Scenario::Custom:
      return "custom";
  }
  return "unknown";
}

std::size_t scenario_dim(Scenario s) {
  switch (s) {
    case Scenario::KsCollinear:
    case Scenario::KsMixed:
      return 3;
    case Scenario::Dim4CollinearC:
    case Scenario::Dim4CollinearCprime:
    case Scenario::Dim4Mixed:
      return 4;
    case Scenario::Custom:
      return 0;
  }
  return 0;
}

std::vector<double> default_left_spectrum(std::size_t dim) {
  if (dim == 3) return {1, 2, 3};
  if (dim == 4) return {1, 2, 3, 4};
  throw ValidationError("no default spectrum for dimension " + std::to_string(dim));
}

std::vector<double> default_right_spectrum(std::size_t dim) {
  if (dim == 3) return {4, 5, 6};
  if (dim == 4) return {5, 6, 7, 8};
  throw ValidationError("no default spectrum for dimension " + std::to_string(dim));
}

std::optional<double> closed_form_expectation(Scenario s, const std::vector<double>& l,
                                              const std::vector<double>& r) {
  const std::size_t d = scenario_dim(s);
  if (d == 0) return std::nullopt;
  if (l.size() != d || r.size() != d) throw DimensionMismatch("spectrum length does not match scenario");
  switch (s) {
    case Scenario::KsCollinear:
      return (l[0] * r[0] + l[1] * r[1] + l[2] * r[2]) / 3.0;
    case Scenario::KsMixed:
      return (2 * l[0] * r[0] + (l[1] + l[2]) * (r[1] + r[2])) / 6.0;
    case Scenario::Dim4CollinearC:
      return (l[0] * r[3] + l[1] * r[2] + l[2] * r[1] + l[3] * r[0]) / 4.0;
    case Scenario::Dim4CollinearCprime:
      return ((l[0] + l[1]) * (r[2] + r[3]) + (l[2] + l[3]) * (r[0] + r[1])) / 8.0;
    case Scenario::Dim4Mixed:
      return (2 * (l[0] * r[3] + l[1] * r[2]) + (l[2] + l[3]) * (r[0] + r[1])) / 8.0;
    case Scenario::Custom:
      break;
  }
  return std::nullopt;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("expected a non-empty array of amplitudes");
  std::vector<Complex> z;
  for (const auto& e : j) {
    if (e.is_number()) {
      z.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      z.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ValidationError("amplitude entries must be numbers or [re, im] pairs");
    }
  }
  return ComplexVector(std::move(z));
}

namespace {

std::vector<Cell> all_cells_except(std::size_t d, const std::vector<Cell>& keep) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (std::find(keep.begin(), keep.end(), Cell{i, j}) == keep.end()) out.push_back({i, j});
  return out;
}

std::vector<double> spectrum_from_json(const json& j, const char* side) {
  if (!j.contains("spectrum")) throw ValidationError(std::string("custom ") + side + " context needs a spectrum");
  try {
    return j.at("spectrum").get<std::vector<double>>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("custom ") + side + " spectrum must be a list of numbers");
  }
}

ContextOperator context_from_json(const json& j, const std::optional<std::vector<double>>& override,
                                  const char* side) {
  if (!j.is_object() || !j.contains("basis")) {
    throw ValidationError(std::string("custom ") + side + " context needs a basis");
  }
  std::vector<ComplexVector> basis;
  for (const auto& v : j.at("basis")) basis.push_back(vector_from_json(v));
  std::vector<double> spectrum = override ? *override : spectrum_from_json(j, side);
  const std::string label = j.value("label", std::string(side));
  return context_from_basis(std::move(basis), EigenvalueSpectrum(std::move(spectrum)), label);
}

Setup build_custom(const ScenarioConfig& config) {
  if (!config.custom) throw ValidationError("scenario 'custom' requires a configuration document (--config)");
  const json& doc = *config.custom;
  try {
    if (!doc.contains("left") || !doc.contains("right") || !doc.contains("state")) {
      throw ValidationError("custom configuration needs 'left', 'right' and 'state'");
    }
    ContextOperator left = context_from_json(doc.at("left"), config.left_spectrum, "left");
    ContextOperator right = context_from_json(doc.at("right"), config.right_spectrum, "right");

    const json& st = doc.at("state");
    std::optional<BipartiteState> state;
    std::string tag;
    if (st.is_string()) {
      tag = st.get<std::string>();
      if (tag == "spin1-singlet") state = spin1_singlet();
      else if (tag == "spin32-singlet") state = spin32_singlet();
      else throw ValidationError("unknown named state '" + tag + "'");
    } else {
      tag = "custom";
      state.emplace(st.at("local_dim").get<std::size_t>(), vector_from_json(st.at("amplitudes")));
    }

    std::optional<std::vector<Cell>> forbidden;
    if (doc.contains("forbidden")) {
      forbidden.emplace();
      for (const auto& c : doc.at("forbidden")) {
        forbidden->push_back({c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>()});
      }
    }
    return Setup{Scenario::Custom, std::move(left), std::move(right), std::move(*state), tag,
                 std::move(forbidden), std::nullopt};
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed custom configuration: ") + e.what());
  }
}

}  // namespace

Setup build_setup(const ScenarioConfig& config) {
  if (config.scenario == Scenario::Custom) return build_custom(config);

  const std::size_t d = scenario_dim(config.scenario);
  const std::vector<double> ls = config.left_spectrum.value_or(default_left_spectrum(d));
  const std::vector<double> rs = config.right_spectrum.value_or(default_right_spectrum(d));
  if (ls.size() != d || rs.size() != d) {
    throw ValidationError("scenario " + scenario_name(config.scenario) + " needs " + std::to_string(d) +
                          " eigenvalues per side");
  }
  const EigenvalueSpectrum left(ls), right(rs);
  const auto closed = closed_form_expectation(config.scenario, ls, rs);

  switch (config.scenario) {
    case Scenario::KsCollinear:
      return Setup{config.scenario, ks_context(left), ks_context(right), spin1_singlet(), "spin1-singlet",
                   all_cells_except(3, {{0, 0}, {1, 1}, {2, 2}}), closed};
    case Scenario::KsMixed:
      return Setup{config.scenario, ks_context(left), ks_context_prime(right), spin1_singlet(),
                   "spin1-singlet", std::vector<Cell>{{0, 1}, {0, 2}, {1, 0}, {2, 0}}, closed};
    case Scenario::Dim4CollinearC:
      return Setup{config.scenario, four_dim_contexts(left).c, four_dim_contexts(right).c, spin32_singlet(),
                   "spin32-singlet", all_cells_except(4, {{0, 3}, {1, 2}, {2, 1}, {3, 0}}), closed};
    case Scenario::Dim4CollinearCprime:
      return Setup{config.scenario, four_dim_contexts(left).c_prime, four_dim_contexts(right).c_prime,
                   spin32_singlet(), "spin32-singlet",
                   std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}, closed};
    case Scenario::Dim4Mixed:
      return Setup{config.scenario, four_dim_contexts(left).c, four_dim_contexts(right).c_prime,
                   spin32_singlet(), "spin32-singlet", std::vector<Cell>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}, closed};
    case Scenario::Custom:
      break;
  }
  throw ValidationError("unhandled scenario");
}

std::vector<ContextOperator> scenario_contexts(const Setup& setup) { return {setup.left, setup.right}; }

}  // namespace interlink
