#pragma once

// Exact Born-rule predictions for a pair of contexts measured on the two
// halves of a bipartite state. Outcomes are addressed by basis slot; the
// eigenvalue is carried only as a label.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "interlink/matrix.hpp"
#include "interlink/observables.hpp"
#include "interlink/states.hpp"

namespace interlink {

inline constexpr double kSupportThreshold = 1e-10;
inline constexpr double kNegativeProbabilityTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kImaginaryTol = 1e-10;

struct OutcomeLabel {
  std::size_t slot;
  double eigenvalue;
};

struct Cell {
  std::size_t left;
  std::size_t right;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class JointTable {
 public:
  // Rejects ragged input, probabilities below -1e-12 and totals off by more
  // than 1e-9; tiny negatives are clamped to zero.
  JointTable(std::vector<OutcomeLabel> left, std::vector<OutcomeLabel> right,
             std::vector<std::vector<double>> probabilities, std::string state_tag = {},
             std::string left_tag = {}, std::string right_tag = {});

  // Uniform table over n x m cells with labels equal to the slot index.
  static JointTable uniform(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return left_.size(); }
  std::size_t cols() const { return right_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return p_[i][j]; }
  const std::vector<std::vector<double>>& probabilities() const { return p_; }
  const std::vector<OutcomeLabel>& left_labels() const { return left_; }
  const std::vector<OutcomeLabel>& right_labels() const { return right_; }
  const std::string& state_tag() const { return state_tag_; }
  const std::string& left_tag() const { return left_tag_; }
  const std::string& right_tag() const { return right_tag_; }

  // The smallest raw entry seen before clamping.
  double min_raw_probability() const { return min_raw_; }

  // Sum_ij P[i][j] lambda_i mu_j.
  double contracted_expectation() const;

 private:
  std::vector<OutcomeLabel> left_;
  std::vector<OutcomeLabel> right_;
  std::vector<std::vector<double>> p_;
  std::string state_tag_;
  std::string left_tag_;
  std::string right_tag_;
  double min_raw_ = 0.0;
};

// Tr{rho (A (x) B)}. Throws DimensionMismatch or NonNegligibleImaginaryPart.
double expectation(const DensityMatrix& rho, const ContextOperator& a, const ContextOperator& b);

// P[i][j] = <s| P_a,i (x) P_b,j |s>. The result is cross-checked against
// expectation() before it is returned.
JointTable joint_distribution(const BipartiteState& s, const ContextOperator& a,
                              const ContextOperator& b, std::string state_tag = {});

enum class UniquenessStatus { Unique, BlockStructured, NotUnique };

const char* to_string(UniquenessStatus s);

struct SupportBlock {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct UniquenessReport {
  bool is_unique = false;
  UniquenessStatus status = UniquenessStatus::NotUnique;
  // Support bijection when unique; otherwise a heaviest matching.
  std::vector<Cell> pairing;
  // 1 - mass carried by the heaviest one-to-one matching.
  double violation_mass = 1.0;
  // Connected components of the support pattern; filled for BlockStructured.
  std::vector<SupportBlock> blocks;
};

UniquenessReport verify_uniqueness(const JointTable& t, double support_tol = kSupportThreshold);

struct CellProbability {
  Cell cell;
  double probability;
};

struct CriterionReport {
  std::vector<CellProbability> forbidden_cells;
  double contextual_mass = 0.0;
};

// Throws BadCellIndex for out-of-range cells.
CriterionReport contextuality_criterion(const JointTable& t, const std::vector<Cell>& forbidden);

struct SequentialOutcome {
  std::size_t slot;
  double eigenvalue;
  double probability;
};

// Prepare `prepared`, then measure `measured`: p_k = |<b_k|prepared>|^2 / |prepared|^2.
std::vector<SequentialOutcome> sequential_link_test(const ComplexVector& prepared,
                                                    const ContextOperator& measured);

struct Marginals {
  std::vector<double> left;
  std::vector<double> right;
};

Marginals marginals(const JointTable& t);

}  // namespace interlink
