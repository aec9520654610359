#pragma once

// Bipartite pure states on d x d systems. Amplitudes use Kronecker order with
// the first particle's index major: flat index = i * d + j.

#include <cstddef>

#include "interlink/matrix.hpp"
#include "interlink/observables.hpp"

namespace interlink {

inline constexpr double kStateNormTol = 1e-12;
inline constexpr double kDensityTol = 1e-10;

class BipartiteState {
 public:
  // Throws InvalidState unless amplitudes has local_dim^2 entries and unit norm.
  BipartiteState(std::size_t local_dim, ComplexVector amplitudes);

  std::size_t local_dim() const { return local_dim_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  const Complex& amplitude(std::size_t i, std::size_t j) const { return amplitudes_[i * local_dim_ + j]; }

 private:
  std::size_t local_dim_;
  ComplexVector amplitudes_;
};

// Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  double purity() const;

 private:
  ComplexMatrix matrix_;
};

// (1/sqrt3)(|+-> - |00> + |-+>), basis |+> = e1, |0> = e2, |-> = e3.
BipartiteState spin1_singlet();

// (1/2)(|3/2,-3/2> - |-3/2,3/2> - |1/2,-1/2> + |-1/2,1/2>), basis ordered
// 3/2, 1/2, -1/2, -3/2.
BipartiteState spin32_singlet();

DensityMatrix density(const BipartiteState& s);

// Partial trace over the second (side == 0 keeps first) or first particle.
ComplexMatrix reduced_density(const BipartiteState& s, int keep_side);

// Exchanges the two tensor factors.
ComplexVector swap_factors(const BipartiteState& s);

// exp(-i angle J(d)) by spectral synthesis.
ComplexMatrix rotation_operator_spin1(const Direction& d, double angle);

// 1 - |<s| (U (x) U) |s>| for an arbitrary local unitary U.
double local_unitary_infidelity(const BipartiteState& s, const ComplexMatrix& u);

// Same, with U the spin-1 rotation about d. Throws UnsupportedDimension when
// s is not a pair of qutrits.
double check_rotation_invariance(const BipartiteState& s, const Direction& d, double angle);

}  // namespace interlink
