#pragma once

// Orthogonality (Greechie) diagrams: atoms are rays, blocks are maximal
// contexts. Atoms shared between blocks are the link observables.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interlink/matrix.hpp"
#include "interlink/observables.hpp"

namespace interlink {

inline constexpr double kRayIdentityTol = 1e-8;

struct Atom {
  std::string id;
  std::optional<ComplexVector> ray;
};

class GreechieDiagram {
 public:
  // Blocks refer to atoms by index. Every block must hold the same number of
  // distinct, in-range atoms and every atom must sit in some block; throws
  // InvalidDiagram otherwise.
  GreechieDiagram(std::vector<Atom> atoms, std::vector<std::vector<std::size_t>> blocks);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t block_size() const { return block_size_; }
  // Non-fatal remarks, e.g. block size 2 (isolated Boolean blocks).
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::optional<std::size_t> find_atom(const std::string& id) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t block_size_ = 0;
  std::vector<std::string> warnings_;
};

// One block per context, atoms merged when their rays agree up to a phase.
// Atoms are numbered by first appearance (block index, then position).
GreechieDiagram diagram_from_contexts(const std::vector<ContextOperator>& contexts,
                                      double tol = kRayIdentityTol);

// assignment[atom] in {0, 1}; exactly one 1 per block.
struct TwoValuedState {
  std::vector<std::uint8_t> assignment;
  friend bool operator==(const TwoValuedState&, const TwoValuedState&) = default;
};

bool satisfies_blocks(const TwoValuedState& s, const GreechieDiagram& g);

// Exhaustive backtracking enumeration. Atoms are decided in index order,
// trying 0 before 1, so the output order is deterministic.
std::vector<TwoValuedState> two_valued_states(const GreechieDiagram& g);

struct SeparationResult {
  bool separating = false;
  // First atom pair (in index order) that no state tells apart.
  std::optional<std::pair<std::size_t, std::size_t>> inseparable;
};

SeparationResult is_separating(const std::vector<TwoValuedState>& states, const GreechieDiagram& g);

std::vector<std::size_t> link_atoms(const GreechieDiagram& g);

// Exchange format (JSON):
//   {"block_size": 3,
//    "atoms":  [{"id": "a0", "ray": [[re, im], ...]}, {"id": "a1"}, ...],
//    "blocks": [["a0", "a1", "a2"], ...]}
// "ray" and "block_size" are optional on input.
std::string diagram_to_json(const GreechieDiagram& g);
GreechieDiagram diagram_from_json(const std::string& text);

}  // namespace interlink
