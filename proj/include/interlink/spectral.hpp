#pragma once

#include <functional>
#include <vector>

#include "interlink/matrix.hpp"

namespace interlink {

inline constexpr double kDefaultConvergenceTol = 1e-12;
inline constexpr double kDefaultMergeTol = 1e-8;
inline constexpr double kPhaseAnchorTol = 1e-8;

struct EigenOptions {
  // Off-diagonal Frobenius norm target, relative to max(1, ||A||_F).
  double convergence_tol = kDefaultConvergenceTol;
  // Allowed max |A - A^dagger| on input.
  double hermitian_tol = 1e-10;
  int max_sweeps = 100;
};

struct Eigensystem {
  std::vector<double> eigenvalues;          // ascending
  std::vector<ComplexVector> eigenvectors;  // orthonormal, phase-canonical
  int sweeps = 0;
};

// Cyclic complex Jacobi rotations. Throws NotHermitian or NoConvergence.
Eigensystem hermitian_eigensystem(const ComplexMatrix& a, const EigenOptions& options = {});

// Rotates v by a global phase so that its first entry with modulus above
// kPhaseAnchorTol is real and positive.
ComplexVector canonical_phase(const ComplexVector& v);

// |<u,v>| / (|u| |v|); 1 means the two vectors span the same ray.
double ray_overlap(const ComplexVector& u, const ComplexVector& v);

// P = v v^dagger / |v|^2. Throws ZeroVector.
ComplexMatrix projector_from_ray(const ComplexVector& v);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending, one per distinct eigenvalue
  std::vector<ComplexMatrix> projectors;
  std::vector<int> multiplicities;

  std::size_t dim() const { return projectors.empty() ? 0 : projectors.front().dim(); }
};

// Groups eigenvalues that lie within merge_tol of the first member of their
// run into a single projector.
SpectralDecomposition spectral_projectors(const ComplexMatrix& a,
                                          double merge_tol = kDefaultMergeTol,
                                          const EigenOptions& options = {});

// Sum_k f(lambda_k) P_k.
ComplexMatrix matrix_function_from_spectrum(const SpectralDecomposition& d,
                                            const std::function<Complex(double)>& f);

}  // namespace interlink
