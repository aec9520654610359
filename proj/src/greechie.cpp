#include "interlink/greechie.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "interlink/errors.hpp"
#include "interlink/spectral.hpp"
#include "json.hpp"

namespace interlink {

GreechieDiagram::GreechieDiagram(std::vector<Atom> atoms, std::vector<std::vector<std::size_t>> blocks)
    : atoms_(std::move(atoms)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidDiagram("diagram has no blocks");
  block_size_ = blocks_.front().size();
  if (block_size_ == 0) throw InvalidDiagram("diagram block is empty");

  std::set<std::string> ids;
  for (const auto& a : atoms_) {
    if (!ids.insert(a.id).second) throw InvalidDiagram("duplicate atom id '" + a.id + "'");
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& block = blocks_[b];
    if (block.size() != block_size_) {
      throw InvalidDiagram("block " + std::to_string(b) + " has " + std::to_string(block.size()) +
                           " atoms, expected " + std::to_string(block_size_));
    }
    std::set<std::size_t> seen;
    for (std::size_t atom : block) {
      if (atom >= atoms_.size()) throw InvalidDiagram("block " + std::to_string(b) + " references a missing atom");
      if (!seen.insert(atom).second) throw InvalidDiagram("block " + std::to_string(b) + " repeats an atom");
    }
  }
  std::vector<bool> used(atoms_.size(), false);
  for (const auto& block : blocks_)
    for (std::size_t atom : block) used[atom] = true;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (!used[i]) throw InvalidDiagram("atom '" + atoms_[i].id + "' belongs to no block");
  if (block_size_ <= 2) {
    warnings_.push_back("block size " + std::to_string(block_size_) +
                        ": contexts this small cannot share a link observable and decay into isolated Boolean blocks");
  }
}

std::optional<std::size_t> GreechieDiagram::find_atom(const std::string& id) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].id == id) return i;
  return std::nullopt;
}

GreechieDiagram diagram_from_contexts(const std::vector<ContextOperator>& contexts, double tol) {
  if (contexts.empty()) throw InvalidDiagram("diagram_from_contexts: no contexts");
  const std::size_t dim = contexts.front().dim();
  std::vector<Atom> atoms;
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& ctx : contexts) {
    if (ctx.dim() != dim) throw DimensionMismatch("diagram_from_contexts: contexts differ in dimension");
    std::vector<std::size_t> block;
    for (const auto& ray : ctx.basis()) {
      auto same = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& a) {
        return 1.0 - ray_overlap(*a.ray, ray) <= tol;
      });
      if (same == atoms.end()) {
        atoms.push_back({"a" + std::to_string(atoms.size()), canonical_phase(ray.normalized())});
        block.push_back(atoms.size() - 1);
      } else {
        block.push_back(static_cast<std::size_t>(same - atoms.begin()));
      }
    }
    blocks.push_back(std::move(block));
  }
  return GreechieDiagram(std::move(atoms), std::move(blocks));
}

bool satisfies_blocks(const TwoValuedState& s, const GreechieDiagram& g) {
  if (s.assignment.size() != g.atom_count()) return false;
  for (auto v : s.assignment)
    if (v > 1) return false;
  for (const auto& block : g.blocks()) {
    int ones = 0;
    for (std::size_t a : block) ones += s.assignment[a];
    if (ones != 1) return false;
  }
  return true;
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(const GreechieDiagram& g)
      : g_(g),
        blocks_of_(g.atom_count()),
        ones_(g.blocks().size(), 0),
        open_(g.blocks().size(), g.block_size()),
        value_(g.atom_count(), 0) {
    for (std::size_t b = 0; b < g.blocks().size(); ++b)
      for (std::size_t a : g.blocks()[b]) blocks_of_[a].push_back(b);
  }

  std::vector<TwoValuedState> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  void descend(std::size_t atom) {
    if (atom == g_.atom_count()) {
      out_.push_back({value_});
      return;
    }
    const auto& mine = blocks_of_[atom];
    // Try 0: every block must still be able to receive its single 1.
    bool zero_ok = true;
    for (std::size_t b : mine)
      if (ones_[b] == 0 && open_[b] == 1) zero_ok = false;
    if (zero_ok) {
      for (std::size_t b : mine) --open_[b];
      value_[atom] = 0;
      descend(atom + 1);
      for (std::size_t b : mine) ++open_[b];
    }
    // Try 1: no block may already hold a 1.
    bool one_ok = true;
    for (std::size_t b : mine)
      if (ones_[b] != 0) one_ok = false;
    if (one_ok) {
      for (std::size_t b : mine) {
        --open_[b];
        ++ones_[b];
      }
      value_[atom] = 1;
      descend(atom + 1);
      value_[atom] = 0;
      for (std::size_t b : mine) {
        ++open_[b];
        --ones_[b];
      }
    }
  }

  const GreechieDiagram& g_;
  std::vector<std::vector<std::size_t>> blocks_of_;
  std::vector<std::size_t> ones_;
  std::vector<std::size_t> open_;
  std::vector<std::uint8_t> value_;
  std::vector<TwoValuedState> out_;
};

}  // namespace

std::vector<TwoValuedState> two_valued_states(const GreechieDiagram& g) { return Enumerator(g).run(); }

SeparationResult is_separating(const std::vector<TwoValuedState>& states, const GreechieDiagram& g) {
  SeparationResult r;
  for (std::size_t x = 0; x < g.atom_count(); ++x)
    for (std::size_t y = x + 1; y < g.atom_count(); ++y) {
      const bool told_apart = std::any_of(states.begin(), states.end(), [&](const TwoValuedState& s) {
        return s.assignment[x] != s.assignment[y];
      });
      if (!told_apart) {
        r.inseparable = std::make_pair(x, y);
        return r;
      }
    }
  r.separating = true;
  return r;
}

std::vector<std::size_t> link_atoms(const GreechieDiagram& g) {
  std::vector<int> count(g.atom_count(), 0);
  for (const auto& block : g.blocks())
    for (std::size_t a : block) ++count[a];
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < count.size(); ++a)
    if (count[a] >= 2) out.push_back(a);
  return out;
}

std::string diagram_to_json(const GreechieDiagram& g) {
  using nlohmann::json;
  json atoms = json::array();
  for (const auto& a : g.atoms()) {
    json entry{{"id", a.id}};
    if (a.ray) {
      json ray = json::array();
      for (const auto& z : a.ray->entries()) ray.push_back({z.real(), z.imag()});
      entry["ray"] = std::move(ray);
    }
    atoms.push_back(std::move(entry));
  }
  json blocks = json::array();
  for (const auto& block : g.blocks()) {
    json ids = json::array();
    for (std::size_t a : block) ids.push_back(g.atoms()[a].id);
    blocks.push_back(std::move(ids));
  }
  return json{{"block_size", g.block_size()}, {"atoms", atoms}, {"blocks", blocks}}.dump(2);
}

GreechieDiagram diagram_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidDiagram(std::string("diagram document is not valid JSON: ") + e.what());
  }
  try {
    std::vector<Atom> atoms;
    for (const auto& entry : doc.at("atoms")) {
      Atom a{entry.at("id").get<std::string>(), std::nullopt};
      if (entry.contains("ray")) {
        std::vector<Complex> z;
        for (const auto& pair : entry.at("ray")) {
          if (pair.size() != 2) throw InvalidDiagram("ray entries must be [re, im] pairs");
          z.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
        a.ray = ComplexVector(std::move(z));
      }
      atoms.push_back(std::move(a));
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& ids : doc.at("blocks")) {
      std::vector<std::size_t> block;
      for (const auto& id : ids) {
        const auto name = id.get<std::string>();
        auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.id == name; });
        if (it == atoms.end()) throw InvalidDiagram("block references unknown atom '" + name + "'");
        block.push_back(static_cast<std::size_t>(it - atoms.begin()));
      }
      blocks.push_back(std::move(block));
    }
    GreechieDiagram g(std::move(atoms), std::move(blocks));
    if (doc.contains("block_size") && doc.at("block_size").get<std::size_t>() != g.block_size()) {
      throw InvalidDiagram("declared block_size does not match the blocks");
    }
    return g;
  } catch (const json::exception& e) {
    throw InvalidDiagram(std::string("malformed diagram document: ") + e.what());
  }
}

}  // namespace interlink
