#include "interlink/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "interlink/correlations.hpp"
#include "interlink/errors.hpp"
#include "interlink/greechie.hpp"
#include "interlink/sampler.hpp"
#include "interlink/scenarios.hpp"
#include "json.hpp"

namespace interlink::cli {

using nlohmann::json;

namespace {

constexpr double kClosedFormTol = 1e-9;
constexpr double kPerfectLinkTol = 1e-10;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scenario = "ks-mixed";
  std::string left;
  std::string right;
  std::uint64_t seed = 42;
  std::size_t shots = 10000;
  std::size_t batches = 1;
  std::string out;
  std::string csv = "shots.csv";
  double tol = kSupportThreshold;
  std::string config;
  std::string diagram;
  std::optional<std::size_t> prepare;
  std::string ray;
};

json num(double x) {
  const double r = round15(x);
  return r == 0.0 ? 0.0 : r;
}

json nums(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

json complex_json(const ComplexVector& v) {
  json a = json::array();
  for (const auto& z : v.entries()) a.push_back({num(z.real()), num(z.imag())});
  return a;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw ValidationError(std::string(flag) + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(std::string(flag) + " is empty");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoFailure("write to '" + path + "' failed");
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

Setup setup_from(const Options& o) {
  ScenarioConfig cfg;
  cfg.scenario = parse_scenario(o.scenario);
  if (!o.left.empty()) cfg.left_spectrum = parse_list(o.left, "--left");
  if (!o.right.empty()) cfg.right_spectrum = parse_list(o.right, "--right");
  if (!o.config.empty()) {
    try {
      cfg.custom = json::parse(read_file(o.config));
    } catch (const json::exception& e) {
      throw ValidationError("--config is not valid JSON: " + std::string(e.what()));
    }
  }
  return build_setup(cfg);
}

json context_json(const ContextOperator& c) {
  json labels = json::array();
  for (std::size_t k = 0; k < c.dim(); ++k) {
    labels.push_back({{"slot", k}, {"eigenvalue", num(c.spectrum()[k])}, {"ray", complex_json(c.basis()[k])}});
  }
  return {{"label", c.label()}, {"dim", c.dim()}, {"outcomes", labels}};
}

json header(const char* command, const Setup& s) {
  return {{"command", command},
          {"scenario", scenario_name(s.scenario)},
          {"state", s.state_tag},
          {"left_context", context_json(s.left)},
          {"right_context", context_json(s.right)}};
}

json table_json(const JointTable& t) {
  json rows = json::array();
  for (const auto& row : t.probabilities()) rows.push_back(nums(row));
  return rows;
}

bool closed_form_matches(double numeric, double closed) {
  return std::abs(numeric - closed) <= kClosedFormTol * std::max(1.0, std::abs(closed));
}

int cmd_expectation(const Options& o, std::ostream& out, std::ostream& err) {
  const Setup s = setup_from(o);
  const double value = expectation(density(s.state), s.left, s.right);
  json doc = header("expectation", s);
  doc["numeric"] = num(value);
  bool ok = true;
  if (s.closed_form) {
    doc["closed_form"] = num(*s.closed_form);
    doc["abs_difference"] = num(std::abs(value - *s.closed_form));
    ok = closed_form_matches(value, *s.closed_form);
  } else {
    doc["closed_form"] = nullptr;
    doc["abs_difference"] = nullptr;
  }
  doc["consistent"] = ok;
  emit(doc, o, out);
  if (!ok) {
    err << "error: numeric expectation disagrees with the closed form\n";
    return kConsistencyFailure;
  }
  return kOk;
}

json uniqueness_json(const UniquenessReport& u) {
  json pairing = json::array();
  for (const auto& c : u.pairing) pairing.push_back({c.left, c.right});
  json blocks = json::array();
  for (const auto& b : u.blocks) blocks.push_back({{"left", b.left}, {"right", b.right}});
  return {{"status", to_string(u.status)},
          {"is_unique", u.is_unique},
          {"pairing", pairing},
          {"violation_mass", num(u.violation_mass)},
          {"blocks", blocks}};
}

json criterion_json(const CriterionReport& c) {
  json cells = json::array();
  for (const auto& fc : c.forbidden_cells) {
    cells.push_back({{"left", fc.cell.left}, {"right", fc.cell.right}, {"probability", num(fc.probability)}});
  }
  return {{"forbidden_cells", cells}, {"contextual_mass", num(c.contextual_mass)}};
}

int cmd_joint(const Options& o, std::ostream& out, std::ostream& err) {
  const Setup s = setup_from(o);
  if (!s.forbidden) {
    throw ValidationError("custom scenarios must list their forbidden cells ('forbidden' in --config)");
  }
  const JointTable t = joint_distribution(s.state, s.left, s.right, s.state_tag);
  const Marginals m = marginals(t);
  const UniquenessReport u = verify_uniqueness(t, o.tol);
  const CriterionReport c = contextuality_criterion(t, *s.forbidden);
  const double numeric = expectation(density(s.state), s.left, s.right);

  json doc = header("joint", s);
  doc["support_threshold"] = o.tol;
  doc["probabilities"] = table_json(t);
  doc["marginals"] = {{"left", nums(m.left)}, {"right", nums(m.right)}};
  doc["expectation"] = {{"numeric", num(numeric)},
                        {"contracted", num(t.contracted_expectation())},
                        {"closed_form", s.closed_form ? json(num(*s.closed_form)) : json(nullptr)}};
  doc["uniqueness"] = uniqueness_json(u);
  doc["criterion"] = criterion_json(c);

  const bool closed_ok = !s.closed_form || closed_form_matches(numeric, *s.closed_form);
  // Named scenarios assert the quantum prediction: nothing on forbidden cells.
  const bool criterion_ok = s.scenario == Scenario::Custom || c.contextual_mass <= o.tol;
  doc["checks"] = {{"closed_form", closed_ok}, {"forbidden_cells_empty", criterion_ok}};
  emit(doc, o, out);
  if (!closed_ok || !criterion_ok) {
    err << "error: internal consistency check failed\n";
    return kConsistencyFailure;
  }
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const Setup s = setup_from(o);
  const JointTable t = joint_distribution(s.state, s.left, s.right, s.state_tag);
  const auto records = sample_batched(t, o.shots, o.seed, o.batches, o.tol);
  const EmpiricalReport r = empirical_report(records, t, o.seed);

  std::ostringstream csv;
  write_shots_csv(csv, records, t);
  write_file(o.csv, csv.str());

  json counts = json::array();
  for (const auto& row : r.counts) counts.push_back(row);
  json freqs = json::array();
  for (const auto& row : r.frequencies) freqs.push_back(nums(row));

  bool forbidden_empty = true;
  json forbidden = json::array();
  if (s.forbidden) {
    for (const Cell& c : *s.forbidden) {
      const auto n = r.counts[c.left][c.right];
      if (n != 0 && t(c.left, c.right) <= o.tol) forbidden_empty = false;
      forbidden.push_back({{"left", c.left}, {"right", c.right}, {"count", n}});
    }
  }

  json doc = header("sample", s);
  doc["seed"] = o.seed;
  doc["shots"] = r.total_shots;
  doc["batches"] = o.batches;
  doc["csv"] = o.csv;
  doc["exact"] = table_json(t);
  doc["counts"] = counts;
  doc["frequencies"] = freqs;
  doc["max_abs_deviation"] = num(r.max_abs_deviation);
  doc["forbidden_counts"] = forbidden;
  doc["checks"] = {{"forbidden_cells_empty", forbidden_empty}};
  emit(doc, o, out);
  if (!forbidden_empty) {
    err << "error: a zero-probability cell was sampled\n";
    return kConsistencyFailure;
  }
  return kOk;
}

int cmd_states(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<GreechieDiagram> g;
  std::string scenario = o.scenario;
  if (!o.diagram.empty()) {
    g = diagram_from_json(read_file(o.diagram));
    scenario = "custom";
  } else {
    const Setup s = setup_from(o);
    g = diagram_from_contexts(scenario_contexts(s));
    scenario = scenario_name(s.scenario);
  }
  for (const auto& w : g->warnings()) err << "warning: " << w << '\n';

  const auto states = two_valued_states(*g);
  const auto sep = is_separating(states, *g);
  json listing = json::array();
  for (const auto& st : states) {
    json truths = json::array();
    for (std::size_t a = 0; a < st.assignment.size(); ++a)
      if (st.assignment[a]) truths.push_back(g->atoms()[a].id);
    listing.push_back({{"assignment", st.assignment}, {"true_atoms", truths}});
  }
  json links = json::array();
  for (std::size_t a : link_atoms(*g)) links.push_back(g->atoms()[a].id);

  json doc{{"command", "states"},
           {"scenario", scenario},
           {"diagram", json::parse(diagram_to_json(*g))},
           {"atom_count", g->atom_count()},
           {"block_count", g->blocks().size()},
           {"link_atoms", links},
           {"state_count", states.size()},
           {"two_valued_states", listing},
           {"separating", sep.separating},
           {"warnings", g->warnings()}};
  if (sep.inseparable) {
    doc["inseparable_pair"] = {g->atoms()[sep.inseparable->first].id, g->atoms()[sep.inseparable->second].id};
  } else {
    doc["inseparable_pair"] = nullptr;
  }
  emit(doc, o, out);
  return kOk;
}

int cmd_sequential(const Options& o, std::ostream& out, std::ostream&) {
  const Setup s = setup_from(o);
  if (o.prepare && !o.ray.empty()) throw ValidationError("--prepare and --ray are mutually exclusive");

  ComplexVector prepared;
  json source;
  if (!o.ray.empty()) {
    try {
      prepared = vector_from_json(json::parse(o.ray));
    } catch (const json::exception& e) {
      throw ValidationError("--ray is not valid JSON: " + std::string(e.what()));
    }
    source = "ray";
  } else {
    const std::size_t slot = o.prepare.value_or(0);
    if (slot >= s.left.dim()) throw ValidationError("--prepare slot is outside the left context");
    prepared = s.left.basis()[slot];
    source = {{"context", s.left.label()}, {"slot", slot}, {"eigenvalue", num(s.left.spectrum()[slot])}};
  }
  const auto outcomes = sequential_link_test(prepared, s.right);

  json list = json::array();
  for (const auto& oc : outcomes) {
    list.push_back({{"slot", oc.slot}, {"eigenvalue", num(oc.eigenvalue)}, {"probability", num(oc.probability)}});
  }
  // A prepared ray that is also an outcome ray of the measured context is a link.
  json link = nullptr;
  for (std::size_t k = 0; k < s.right.dim(); ++k) {
    if (1.0 - ray_overlap(prepared, s.right.basis()[k]) <= kRayIdentityTol) {
      const double p = outcomes[k].probability;
      link = {{"measured_slot", k}, {"probability", num(p)}, {"perfect_correlation", p >= 1.0 - kPerfectLinkTol}};
    }
  }

  json doc = header("sequential", s);
  doc["prepared"] = {{"source", source}, {"ray", complex_json(prepared.normalized())}};
  doc["measured_context"] = s.right.label();
  doc["outcomes"] = list;
  doc["link"] = link;
  emit(doc, o, out);
  return kOk;
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interlinked-context singlet predictions, two-valued states and simulated runs", "interlink"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario,
                    "ks-collinear | ks-mixed | dim4-collinear-C | dim4-collinear-Cprime | dim4-mixed | custom")
        ->capture_default_str();
    sub->add_option("--left", o.left, "comma-separated eigenvalues of the left context");
    sub->add_option("--right", o.right, "comma-separated eigenvalues of the right context");
    sub->add_option("--config", o.config, "JSON configuration for --scenario custom");
    sub->add_option("--out", o.out, "write the JSON document here instead of stdout");
    sub->add_option("--tol", o.tol, "support threshold for populated cells")->capture_default_str();
  };

  auto* expectation_cmd = app.add_subcommand("expectation", "Tr{rho (A (x) B)} with the closed form");
  common(expectation_cmd);
  auto* joint_cmd = app.add_subcommand("joint", "joint outcome table with uniqueness and criterion reports");
  common(joint_cmd);
  auto* sample_cmd = app.add_subcommand("sample", "simulated coincidence run");
  common(sample_cmd);
  sample_cmd->add_option("--shots", o.shots, "number of shots")->capture_default_str();
  sample_cmd->add_option("--seed", o.seed, "64-bit generator seed")->capture_default_str();
  sample_cmd->add_option("--batches", o.batches, "independent seeded batches")->capture_default_str();
  sample_cmd->add_option("--csv", o.csv, "shot CSV path")->capture_default_str();
  auto* states_cmd = app.add_subcommand("states", "two-valued states of the scenario's Greechie diagram");
  common(states_cmd);
  states_cmd->add_option("--diagram", o.diagram, "diagram exchange file instead of a scenario");
  auto* sequential_cmd = app.add_subcommand("sequential", "prepare a left-context ray, measure the right context");
  common(sequential_cmd);
  sequential_cmd->add_option("--prepare", o.prepare, "slot of the left context to prepare (default 0)");
  sequential_cmd->add_option("--ray", o.ray, "explicit ray as JSON, e.g. [[0,0],[1,0],[0,0]]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidationFailure;
  }

  try {
    if (*expectation_cmd) return cmd_expectation(o, out, err);
    if (*joint_cmd) return cmd_joint(o, out, err);
    if (*sample_cmd) return cmd_sample(o, out, err);
    if (*states_cmd) return cmd_states(o, out, err);
    if (*sequential_cmd) return cmd_sequential(o, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kConsistencyFailure;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoFailure;
  }
  return kValidationFailure;
}

}  // namespace interlink::cli
