#include "interlink/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "interlink/errors.hpp"

namespace interlink {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double spectrum_scale(const EigenvalueSpectrum& s) {
  double m = 1.0;
  for (double v : s.values()) m = std::max(m, std::abs(v));
  return m;
}

ComplexMatrix squared(const ComplexMatrix& m) { return m * m; }

}  // namespace

Direction::Direction(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw NonFinite("direction angles must be finite");
  theta = wrap_two_pi(theta);
  if (theta > kPi) {
    theta = kTwoPi - theta;
    phi += kPi;
  }
  theta_ = theta;
  phi_ = wrap_two_pi(phi);
}

EigenvalueSpectrum::EigenvalueSpectrum(std::vector<double> values, double merge_tol)
    : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("eigenvalue spectrum is empty");
  for (double v : values_)
    if (!std::isfinite(v)) throw NonFinite("eigenvalue spectrum has a non-finite value");
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (std::abs(values_[i] - values_[j]) <= merge_tol) {
        std::ostringstream msg;
        msg << "eigenvalues at slots " << i << " and " << j << " coincide (" << values_[i]
            << ", " << values_[j] << "); a maximal context needs distinct outcomes";
        throw DegenerateSpectrum(msg.str());
      }
}

EigenvalueSpectrum::EigenvalueSpectrum(std::initializer_list<double> values)
    : EigenvalueSpectrum(std::vector<double>(values)) {}

ContextOperator::ContextOperator(ComplexMatrix matrix, std::vector<ComplexVector> basis,
                                 EigenvalueSpectrum spectrum, std::string label)
    : matrix_(std::move(matrix)),
      basis_(std::move(basis)),
      spectrum_(std::move(spectrum)),
      label_(std::move(label)) {
  const std::size_t n = matrix_.dim();
  if (basis_.size() != n || spectrum_.size() != n) {
    throw DimensionMismatch("context '" + label_ + "': matrix, basis and spectrum sizes differ");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_[i].dim() != n) throw DimensionMismatch("context '" + label_ + "': basis vector size");
    for (std::size_t j = i; j < n; ++j) {
      const Complex g = inner(basis_[i], basis_[j]);
      const Complex expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > kBasisOrthonormalTol) {
        throw NonOrthonormalBasis("context '" + label_ + "': basis vectors " + std::to_string(i) +
                                  " and " + std::to_string(j) + " are not orthonormal");
      }
    }
  }
  ComplexMatrix synth(n);
  for (std::size_t k = 0; k < n; ++k) synth += spectrum_[k] * outcome_projector(k);
  if (max_abs_diff(synth, matrix_) > kContextSynthesisTol * spectrum_scale(spectrum_)) {
    throw ConsistencyError("context '" + label_ + "': matrix differs from its spectral synthesis");
  }
}

ComplexMatrix spin1_operator(const Direction& d) {
  const double ct = std::cos(d.theta());
  const double st = std::sin(d.theta());
  const Complex lower = std::polar(st * kInvSqrt2, d.phi());   // e^{i phi} sin(theta)/sqrt2
  const Complex upper = std::polar(st * kInvSqrt2, -d.phi());  // e^{-i phi} sin(theta)/sqrt2
  return ComplexMatrix{
      {ct, upper, 0.0},
      {lower, 0.0, upper},
      {0.0, lower, -ct},
  };
}

std::array<SpinEigenpair, 3> spin1_eigensystem(const Direction& d) {
  const double st = std::sin(d.theta());
  const double ct = std::cos(d.theta());
  const double c2 = std::pow(std::cos(d.theta() / 2.0), 2);
  const double s2 = std::pow(std::sin(d.theta() / 2.0), 2);
  const Complex em = std::polar(1.0, -d.phi());
  const Complex ep = std::polar(1.0, d.phi());
  return {{
      {+1.0, ComplexVector{em * c2, st * kInvSqrt2, ep * s2}},
      {0.0, ComplexVector{-kInvSqrt2 * em * st, ct, kInvSqrt2 * ep * st}},
      {-1.0, ComplexVector{em * s2, -st * kInvSqrt2, ep * c2}},
  }};
}

ContextOperator context_from_basis(std::vector<ComplexVector> basis, EigenvalueSpectrum spectrum,
                                   std::string label) {
  if (basis.empty()) throw DimensionMismatch("context_from_basis: empty basis");
  const std::size_t n = basis.front().dim();
  if (basis.size() != n || spectrum.size() != n) {
    throw DimensionMismatch("context_from_basis: need dim basis vectors and dim eigenvalues");
  }
  ComplexMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (basis[k].dim() != n) throw DimensionMismatch("context_from_basis: ragged basis");
    m += spectrum[k] * ComplexMatrix::outer(basis[k], basis[k]);
  }
  return ContextOperator(std::move(m), std::move(basis), std::move(spectrum), std::move(label));
}

namespace {

// (1/2)[(a+b-c) J^2(d1) + (a-b+c) J^2(d2) + (b+c-a) J^2(z)]
ComplexMatrix ks_combination(const EigenvalueSpectrum& s, const Direction& d1, const Direction& d2) {
  if (s.size() != 3) throw DimensionMismatch("Kochen-Specker context needs three eigenvalues");
  const double a = s[0], b = s[1], c = s[2];
  const ComplexMatrix jz2 = squared(spin1_operator(Direction(0.0, 0.0)));
  return 0.5 * ((a + b - c) * squared(spin1_operator(d1)) + (a - b + c) * squared(spin1_operator(d2)) +
                (b + c - a) * jz2);
}

}  // namespace

ContextOperator ks_context(const EigenvalueSpectrum& spectrum) {
  ComplexMatrix m = ks_combination(spectrum, Direction(kPi / 2, 0.0), Direction(kPi / 2, kPi / 2));
  std::vector<ComplexVector> basis{
      ComplexVector{0.0, 1.0, 0.0},
      ComplexVector{kInvSqrt2, 0.0, kInvSqrt2},
      ComplexVector{-kInvSqrt2, 0.0, kInvSqrt2},
  };
  return ContextOperator(std::move(m), std::move(basis), spectrum, "C_KS");
}

ContextOperator ks_context_prime(const EigenvalueSpectrum& spectrum) {
  ComplexMatrix m =
      ks_combination(spectrum, Direction(kPi / 2, kPi / 4), Direction(kPi / 2, 3 * kPi / 4));
  std::vector<ComplexVector> basis{
      ComplexVector{0.0, 1.0, 0.0},
      ComplexVector{-kI * kInvSqrt2, 0.0, kInvSqrt2},
      ComplexVector{kI * kInvSqrt2, 0.0, kInvSqrt2},
  };
  return ContextOperator(std::move(m), std::move(basis), spectrum, "C'_KS");
}

FourDimContexts four_dim_contexts(const EigenvalueSpectrum& spectrum) {
  if (spectrum.size() != 4) throw DimensionMismatch("four_dim_contexts needs four eigenvalues");
  const double a = spectrum[0], b = spectrum[1], g = spectrum[2], d = spectrum[3];

  std::vector<ComplexVector> std_basis;
  for (std::size_t k = 0; k < 4; ++k) std_basis.push_back(ComplexVector::basis(4, k));
  ContextOperator c(ComplexMatrix::diagonal({a, b, g, d}), std::move(std_basis), spectrum, "C");

  const double mean = (a + b) / 2, half_gap = (a - b) / 2;
  ComplexMatrix mp{
      {mean, half_gap, 0.0, 0.0},
      {half_gap, mean, 0.0, 0.0},
      {0.0, 0.0, g, 0.0},
      {0.0, 0.0, 0.0, d},
  };
  std::vector<ComplexVector> rotated{
      ComplexVector{kInvSqrt2, kInvSqrt2, 0.0, 0.0},
      ComplexVector{-kInvSqrt2, kInvSqrt2, 0.0, 0.0},
      ComplexVector::basis(4, 2),
      ComplexVector::basis(4, 3),
  };
  ContextOperator cp(std::move(mp), std::move(rotated), spectrum, "C'");
  return {std::move(c), std::move(cp)};
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b - b * a).max_abs();
}

}  // namespace interlink
