#pragma once

// Random generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths the oracles are checking.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "interlink/greechie.hpp"
#include "interlink/matrix.hpp"
#include "interlink/observables.hpp"
#include "interlink/states.hpp"

namespace interlink::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Direction random_direction() {
  return Direction(std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2 * std::numbers::pi));
}

// n reals in [-10, 10] with pairwise gaps of at least 0.05.
inline std::vector<double> random_spectrum(std::size_t n) {
  for (;;) {
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(uniform(-10.0, 10.0));
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(v[i] - v[j]) < 0.05) ok = false;
    if (ok) return v;
  }
}

inline ComplexMatrix random_matrix(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(uniform(-1, 1), uniform(-1, 1));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n) {
  const ComplexMatrix m = random_matrix(n);
  return 0.5 * (m + m.adjoint());
}

inline Complex random_phase() { return std::polar(1.0, uniform(0.0, 2 * std::numbers::pi)); }

// Entry-by-entry Kronecker product written from the index formula
// result[ia*db + ib][ja*db + jb] = a[ia][ja] * b[ib][jb], via basis outer products.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja)
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb) {
          const std::size_t row = ia * db + ib;
          const std::size_t col = ja * db + jb;
          out(row, col) = a(ia, ja) * b(ib, jb);
        }
  return out;
}

// P[i][j] = |(<a_i| (x) <b_j|) |s>|^2 by direct amplitude contraction.
inline std::vector<std::vector<double>> joint_oracle(const BipartiteState& s, const std::vector<ComplexVector>& left,
                                                     const std::vector<ComplexVector>& right) {
  const std::size_t d = s.local_dim();
  std::vector<std::vector<double>> p(left.size(), std::vector<double>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      Complex amp = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          amp += std::conj(left[i][k]) * std::conj(right[j][l]) * s.amplitudes()[k * d + l];
      p[i][j] = std::norm(amp);
    }
  return p;
}

// Count of {0,1} assignments with exactly one 1 per block, by scanning all 2^n.
inline std::size_t brute_force_state_count(std::size_t atoms, const std::vector<std::vector<std::size_t>>& blocks) {
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms); ++mask) {
    bool ok = true;
    for (const auto& b : blocks) {
      int ones = 0;
      for (std::size_t a : b) ones += (mask >> a) & 1;
      if (ones != 1) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// Pairwise scan: every atom pair differs in at least one state.
inline bool brute_force_separating(std::size_t atoms, const std::vector<TwoValuedState>& states) {
  for (std::size_t x = 0; x < atoms; ++x)
    for (std::size_t y = x + 1; y < atoms; ++y) {
      bool differs = false;
      for (const auto& s : states) differs = differs || s.assignment[x] != s.assignment[y];
      if (!differs) return false;
    }
  return true;
}

// Phase-insensitive vector comparison: min over global phase of max |u - e^{ia} v|.
inline double ray_distance(const ComplexVector& u, const ComplexVector& v) {
  const Complex ov = inner(v, u);
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex{1.0};
  return max_abs_diff(u, phase * v);
}

}  // namespace interlink::testing
