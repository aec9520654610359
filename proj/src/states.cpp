#include "interlink/states.hpp"

#include <cmath>
#include <string>

#include "interlink/errors.hpp"
#include "interlink/spectral.hpp"

namespace interlink {

BipartiteState::BipartiteState(std::size_t local_dim, ComplexVector amplitudes)
    : local_dim_(local_dim), amplitudes_(std::move(amplitudes)) {
  if (local_dim_ < 2 || amplitudes_.dim() != local_dim_ * local_dim_) {
    throw InvalidState("bipartite state needs local_dim^2 amplitudes (local_dim=" +
                       std::to_string(local_dim_) + ", got " + std::to_string(amplitudes_.dim()) + ")");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kStateNormTol) {
    throw InvalidState("bipartite state is not normalized (norm " +
                       std::to_string(amplitudes_.norm()) + ")");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (!is_hermitian(matrix_, kDensityTol)) throw InvalidState("density matrix is not Hermitian");
  if (std::abs(trace(matrix_) - Complex{1.0}) > kDensityTol) {
    throw InvalidState("density matrix trace is not 1");
  }
  const Eigensystem es = hermitian_eigensystem(matrix_);
  if (es.eigenvalues.front() < -kDensityTol) {
    throw InvalidState("density matrix has a negative eigenvalue " +
                       std::to_string(es.eigenvalues.front()));
  }
}

double DensityMatrix::purity() const { return trace(matrix_ * matrix_).real(); }

BipartiteState spin1_singlet() {
  const double a = 1.0 / std::sqrt(3.0);
  ComplexVector v(9);
  v[0 * 3 + 2] = a;   // |+->
  v[1 * 3 + 1] = -a;  // |00>
  v[2 * 3 + 0] = a;   // |-+>
  return BipartiteState(3, std::move(v));
}

BipartiteState spin32_singlet() {
  ComplexVector v(16);
  v[0 * 4 + 3] = 0.5;   // |3/2, -3/2>
  v[3 * 4 + 0] = -0.5;  // |-3/2, 3/2>
  v[1 * 4 + 2] = -0.5;  // |1/2, -1/2>
  v[2 * 4 + 1] = 0.5;   // |-1/2, 1/2>
  return BipartiteState(4, std::move(v));
}

DensityMatrix density(const BipartiteState& s) {
  return DensityMatrix(ComplexMatrix::outer(s.amplitudes(), s.amplitudes()));
}

ComplexMatrix reduced_density(const BipartiteState& s, int keep_side) {
  const std::size_t d = s.local_dim();
  ComplexMatrix r(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) {
        if (keep_side == 0) {
          r(a, b) += s.amplitude(a, k) * std::conj(s.amplitude(b, k));
        } else {
          r(a, b) += s.amplitude(k, a) * std::conj(s.amplitude(k, b));
        }
      }
  return r;
}

ComplexVector swap_factors(const BipartiteState& s) {
  const std::size_t d = s.local_dim();
  ComplexVector out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[j * d + i] = s.amplitude(i, j);
  return out;
}

ComplexMatrix rotation_operator_spin1(const Direction& d, double angle) {
  if (!std::isfinite(angle)) throw NonFinite("rotation angle must be finite");
  const SpectralDecomposition sd = spectral_projectors(spin1_operator(d));
  return matrix_function_from_spectrum(sd, [angle](double lambda) {
    return std::exp(Complex{0.0, -angle * lambda});
  });
}

double local_unitary_infidelity(const BipartiteState& s, const ComplexMatrix& u) {
  if (u.dim() != s.local_dim()) throw DimensionMismatch("local unitary does not match local dimension");
  const ComplexVector& v = s.amplitudes();
  return 1.0 - std::abs(sandwich(v, kron(u, u), v));
}

double check_rotation_invariance(const BipartiteState& s, const Direction& d, double angle) {
  if (s.local_dim() != 3) {
    throw UnsupportedDimension("rotation invariance is only defined for spin-1 pairs (local_dim 3)");
  }
  return local_unitary_infidelity(s, rotation_operator_spin1(d, angle));
}

}  // namespace interlink
