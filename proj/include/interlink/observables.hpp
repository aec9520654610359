#pragma once

// Spin-1 direction observables, the maximal Kochen-Specker context operators
// in three dimensions, and the two-link context pair in four dimensions.

#include <array>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "interlink/matrix.hpp"
#include "interlink/spectral.hpp"

namespace interlink {

inline constexpr double kBasisOrthonormalTol = 1e-8;
inline constexpr double kContextSynthesisTol = 1e-10;

// A point on the unit sphere in spherical coordinates. Construction folds the
// angles into 0 <= theta <= pi, 0 <= phi < 2 pi without changing the direction.
class Direction {
 public:
  Direction(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

// Outcome values of a context, one per basis slot. Values must be pairwise
// separated by more than the merge tolerance.
class EigenvalueSpectrum {
 public:
  EigenvalueSpectrum(std::vector<double> values, double merge_tol = kDefaultMergeTol);
  EigenvalueSpectrum(std::initializer_list<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// A maximal observable: an orthonormal basis with one outcome value per ray.
class ContextOperator {
 public:
  // Validates orthonormality and that matrix == sum_k spectrum[k] |b_k><b_k|.
  ContextOperator(ComplexMatrix matrix, std::vector<ComplexVector> basis,
                  EigenvalueSpectrum spectrum, std::string label);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<ComplexVector>& basis() const { return basis_; }
  const EigenvalueSpectrum& spectrum() const { return spectrum_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return matrix_.dim(); }

  // Rank-1 projector for outcome slot k.
  ComplexMatrix outcome_projector(std::size_t k) const { return projector_from_ray(basis_[k]); }

 private:
  ComplexMatrix matrix_;
  std::vector<ComplexVector> basis_;
  EigenvalueSpectrum spectrum_;
  std::string label_;
};

// J(theta, phi) = n . S for spin 1 in the (+1, 0, -1) basis.
ComplexMatrix spin1_operator(const Direction& d);

struct SpinEigenpair {
  double eigenvalue;
  ComplexVector vector;
};

// Closed-form eigenvectors for eigenvalues +1, 0, -1 (in that order) with all
// free phases set to zero.
std::array<SpinEigenpair, 3> spin1_eigensystem(const Direction& d);

// Sum_k spectrum[k] |b_k><b_k| after checking orthonormality.
ContextOperator context_from_basis(std::vector<ComplexVector> basis, EigenvalueSpectrum spectrum,
                                   std::string label = "custom");

// Kochen-Specker operators built from squared spin components.
// Basis of C_KS: (0,1,0), (1,0,1)/sqrt2, (-1,0,1)/sqrt2.
// Basis of C'_KS: (0,1,0), (-i,0,1)/sqrt2, (i,0,1)/sqrt2.
ContextOperator ks_context(const EigenvalueSpectrum& spectrum);
ContextOperator ks_context_prime(const EigenvalueSpectrum& spectrum);

struct FourDimContexts {
  ContextOperator c;        // diag(alpha, beta, gamma, delta)
  ContextOperator c_prime;  // rotated in the e1/e2 plane, shares e3, e4 with c
};

FourDimContexts four_dim_contexts(const EigenvalueSpectrum& spectrum);

// max |[A, B]|
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace interlink
