#include "interlink/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "interlink/errors.hpp"

namespace interlink {

JointTable::JointTable(std::vector<OutcomeLabel> left, std::vector<OutcomeLabel> right,
                       std::vector<std::vector<double>> probabilities, std::string state_tag,
                       std::string left_tag, std::string right_tag)
    : left_(std::move(left)),
      right_(std::move(right)),
      p_(std::move(probabilities)),
      state_tag_(std::move(state_tag)),
      left_tag_(std::move(left_tag)),
      right_tag_(std::move(right_tag)) {
  if (left_.empty() || right_.empty() || p_.size() != left_.size()) {
    throw ShapeMismatch("joint table rows do not match left labels");
  }
  double total = 0.0;
  min_raw_ = std::numeric_limits<double>::infinity();
  for (auto& row : p_) {
    if (row.size() != right_.size()) throw ShapeMismatch("joint table row length does not match right labels");
    for (double& x : row) {
      if (!std::isfinite(x)) throw NonFinite("joint table entry is not finite");
      min_raw_ = std::min(min_raw_, x);
      if (x < -kNegativeProbabilityTol) {
        throw NegativeProbability("joint table entry " + std::to_string(x) + " is negative");
      }
      x = std::max(x, 0.0);
      total += x;
    }
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw ConsistencyError("joint table sums to " + std::to_string(total));
  }
}

JointTable JointTable::uniform(std::size_t rows, std::size_t cols) {
  std::vector<OutcomeLabel> l, r;
  for (std::size_t i = 0; i < rows; ++i) l.push_back({i, static_cast<double>(i)});
  for (std::size_t j = 0; j < cols; ++j) r.push_back({j, static_cast<double>(j)});
  const double p = 1.0 / static_cast<double>(rows * cols);
  return JointTable(std::move(l), std::move(r),
                    std::vector<std::vector<double>>(rows, std::vector<double>(cols, p)), "uniform");
}

double JointTable::contracted_expectation() const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) s += p_[i][j] * left_[i].eigenvalue * right_[j].eigenvalue;
  return s;
}

double expectation(const DensityMatrix& rho, const ContextOperator& a, const ContextOperator& b) {
  if (rho.dim() != a.dim() * b.dim()) {
    throw DimensionMismatch("expectation: state dimension " + std::to_string(rho.dim()) +
                            " != " + std::to_string(a.dim()) + " x " + std::to_string(b.dim()));
  }
  const Complex t = trace(rho.matrix() * kron(a.matrix(), b.matrix()));
  if (std::abs(t.imag()) > kImaginaryTol * std::max(1.0, std::abs(t.real()))) {
    throw NonNegligibleImaginaryPart("expectation has imaginary part " + std::to_string(t.imag()));
  }
  return t.real();
}

namespace {

std::vector<OutcomeLabel> labels_of(const ContextOperator& c) {
  std::vector<OutcomeLabel> out;
  for (std::size_t k = 0; k < c.dim(); ++k) out.push_back({k, c.spectrum()[k]});
  return out;
}

}  // namespace

JointTable joint_distribution(const BipartiteState& s, const ContextOperator& a,
                              const ContextOperator& b, std::string state_tag) {
  if (s.local_dim() * s.local_dim() != a.dim() * b.dim()) {
    throw DimensionMismatch("joint_distribution: state does not live on the context pair's space");
  }
  const ComplexVector& v = s.amplitudes();
  std::vector<std::vector<double>> p(a.dim(), std::vector<double>(b.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const ComplexMatrix pa = a.outcome_projector(i);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Complex z = sandwich(v, kron(pa, b.outcome_projector(j)), v);
      p[i][j] = z.real();
    }
  }
  JointTable table(labels_of(a), labels_of(b), std::move(p), std::move(state_tag), a.label(), b.label());

  const double exact = expectation(density(s), a, b);
  const double contracted = table.contracted_expectation();
  if (std::abs(exact - contracted) > kNormalizationTol * std::max(1.0, std::abs(exact))) {
    throw ConsistencyError("joint table contraction " + std::to_string(contracted) +
                           " disagrees with expectation " + std::to_string(exact));
  }
  return table;
}

const char* to_string(UniquenessStatus s) {
  switch (s) {
    case UniquenessStatus::Unique:
      return "unique";
    case UniquenessStatus::BlockStructured:
      return "block-structured";
    case UniquenessStatus::NotUnique:
      return "not-unique";
  }
  return "unknown";
}

namespace {

// Heaviest one-to-one matching between rows and columns (assignment problem)
// by dynamic programming over subsets of the narrower side.
std::vector<Cell> heaviest_matching(const JointTable& t) {
  const bool transpose = t.cols() > t.rows();
  const std::size_t n = transpose ? t.cols() : t.rows();  // iterated side
  const std::size_t m = transpose ? t.rows() : t.cols();  // subset side
  if (m > 20) throw ShapeMismatch("uniqueness check supports at most 20 outcomes on the narrow side");
  auto at = [&](std::size_t i, std::size_t j) { return transpose ? t(j, i) : t(i, j); };

  const std::size_t states = std::size_t{1} << m;
  constexpr double kUnreached = -1.0;
  std::vector<std::vector<double>> dp(n + 1, std::vector<double>(states, kUnreached));
  dp[0][0] = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t mask = 0; mask < states; ++mask) {
      const double base = dp[i][mask];
      if (base < 0.0) continue;
      dp[i + 1][mask] = std::max(dp[i + 1][mask], base);
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        const std::size_t next = mask | (std::size_t{1} << j);
        dp[i + 1][next] = std::max(dp[i + 1][next], base + at(i, j));
      }
    }

  std::size_t mask = static_cast<std::size_t>(
      std::max_element(dp[n].begin(), dp[n].end()) - dp[n].begin());
  std::vector<Cell> pairs;
  for (std::size_t i = n; i-- > 0;) {
    const double here = dp[i + 1][mask];
    if (dp[i][mask] >= 0.0 && dp[i][mask] == here) continue;  // row i unmatched
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t bit = std::size_t{1} << j;
      if (!(mask & bit)) continue;
      const double prev = dp[i][mask ^ bit];
      if (prev >= 0.0 && prev + at(i, j) == here) {
        pairs.push_back(transpose ? Cell{j, i} : Cell{i, j});
        mask ^= bit;
        break;
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Cell& a, const Cell& b) { return a.left < b.left; });
  return pairs;
}

}  // namespace

UniquenessReport verify_uniqueness(const JointTable& t, double support_tol) {
  const std::size_t n = t.rows(), m = t.cols();
  auto supported = [&](std::size_t i, std::size_t j) { return t(i, j) > support_tol; };

  std::vector<int> row_count(n, 0), col_count(m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (supported(i, j)) {
        ++row_count[i];
        ++col_count[j];
      }

  UniquenessReport report;
  report.pairing = heaviest_matching(t);
  double matched = 0.0;
  for (const Cell& c : report.pairing) matched += t(c.left, c.right);
  report.violation_mass = std::max(0.0, 1.0 - matched);

  const bool bijective = n == m && std::all_of(row_count.begin(), row_count.end(), [](int c) { return c == 1; }) &&
                         std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
  if (bijective && report.violation_mass <= support_tol) {
    report.is_unique = true;
    report.status = UniquenessStatus::Unique;
    return report;
  }

  // Components of the bipartite support graph; rows are 0..n-1, columns n..n+m-1.
  std::vector<std::size_t> parent(n + m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (supported(i, j)) parent[find(i)] = find(n + j);

  std::vector<SupportBlock> blocks;
  std::vector<std::size_t> root_to_block(n + m, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n + m; ++x) {
    const bool empty = x < n ? row_count[x] == 0 : col_count[x - n] == 0;
    if (empty) continue;
    const std::size_t r = find(x);
    if (root_to_block[r] == static_cast<std::size_t>(-1)) {
      root_to_block[r] = blocks.size();
      blocks.emplace_back();
    }
    auto& b = blocks[root_to_block[r]];
    if (x < n) b.left.push_back(x); else b.right.push_back(x - n);
  }

  const bool covers_all = std::none_of(row_count.begin(), row_count.end(), [](int c) { return c == 0; }) &&
                          std::none_of(col_count.begin(), col_count.end(), [](int c) { return c == 0; });
  bool complete = covers_all;
  for (const auto& b : blocks)
    for (std::size_t i : b.left)
      for (std::size_t j : b.right)
        if (!supported(i, j)) complete = false;

  report.status = complete ? UniquenessStatus::BlockStructured : UniquenessStatus::NotUnique;
  if (complete) report.blocks = std::move(blocks);
  return report;
}

CriterionReport contextuality_criterion(const JointTable& t, const std::vector<Cell>& forbidden) {
  CriterionReport report;
  double mass = 0.0;
  for (const Cell& c : forbidden) {
    if (c.left >= t.rows() || c.right >= t.cols()) {
      throw BadCellIndex("forbidden cell (" + std::to_string(c.left) + ", " + std::to_string(c.right) +
                         ") is outside the " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                         " table");
    }
    report.forbidden_cells.push_back({c, t(c.left, c.right)});
    mass += t(c.left, c.right);
  }
  report.contextual_mass = std::clamp(mass, 0.0, 1.0);
  return report;
}

std::vector<SequentialOutcome> sequential_link_test(const ComplexVector& prepared,
                                                    const ContextOperator& measured) {
  if (prepared.dim() != measured.dim()) {
    throw DimensionMismatch("sequential_link_test: prepared ray has dimension " +
                            std::to_string(prepared.dim()) + ", context has " +
                            std::to_string(measured.dim()));
  }
  const ComplexVector u = prepared.normalized();
  std::vector<SequentialOutcome> out;
  for (std::size_t k = 0; k < measured.dim(); ++k) {
    out.push_back({k, measured.spectrum()[k], std::norm(inner(measured.basis()[k], u))});
  }
  return out;
}

Marginals marginals(const JointTable& t) {
  Marginals m{std::vector<double>(t.rows(), 0.0), std::vector<double>(t.cols(), 0.0)};
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      m.left[i] += t(i, j);
      m.right[j] += t(i, j);
    }
  return m;
}

}  // namespace interlink
