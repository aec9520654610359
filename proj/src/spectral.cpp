#include "interlink/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "interlink/errors.hpp"

namespace interlink {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary G = diag(1, e^{-i phi}) * R(c, s) acting on
// the (p, q) plane, where a(p, q) = |a(p, q)| e^{i phi}. A <- G^dagger A G, V <- V G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  // A <- A G  (columns p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  // A <- G^dagger A  (rows p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

ComplexVector canonical_phase(const ComplexVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double m = std::abs(v[i]);
    if (m > kPhaseAnchorTol) {
      ComplexVector out = v;
      out *= std::conj(v[i]) / m;
      out[i] = m;
      return out;
    }
  }
  return v;
}

double ray_overlap(const ComplexVector& u, const ComplexVector& v) {
  const double nu = u.norm(), nv = v.norm();
  if (!(nu > 0.0) || !(nv > 0.0)) throw ZeroVector("ray overlap of a zero vector");
  return std::abs(inner(u, v)) / (nu * nv);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& a, const EigenOptions& options) {
  if (!is_hermitian(a, options.hermitian_tol)) {
    throw NotHermitian("hermitian_eigensystem: input is not Hermitian within " +
                       std::to_string(options.hermitian_tol));
  }
  const std::size_t n = a.dim();
  ComplexMatrix work = 0.5 * (a + a.adjoint());
  ComplexMatrix vecs = ComplexMatrix::identity(n);
  const double target = options.convergence_tol * std::max(1.0, a.frobenius_norm());

  int sweep = 0;
  while (off_diagonal_norm(work) > target) {
    if (sweep == options.max_sweeps) {
      throw NoConvergence("hermitian_eigensystem: off-diagonal norm " +
                          std::to_string(off_diagonal_norm(work)) + " after " +
                          std::to_string(sweep) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, vecs, p, q);
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() < work(j, j).real();
  });

  Eigensystem out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(work(k, k).real());
    out.eigenvectors.push_back(canonical_phase(vecs.column(k)));
  }
  return out;
}

ComplexMatrix projector_from_ray(const ComplexVector& v) {
  const ComplexVector u = v.normalized();
  return ComplexMatrix::outer(u, u);
}

SpectralDecomposition spectral_projectors(const ComplexMatrix& a, double merge_tol,
                                          const EigenOptions& options) {
  const Eigensystem es = hermitian_eigensystem(a, options);
  SpectralDecomposition d;
  std::size_t k = 0;
  while (k < es.eigenvalues.size()) {
    const double anchor = es.eigenvalues[k];
    ComplexMatrix p(a.dim());
    double sum = 0.0;
    int count = 0;
    while (k < es.eigenvalues.size() && es.eigenvalues[k] - anchor <= merge_tol) {
      p += ComplexMatrix::outer(es.eigenvectors[k], es.eigenvectors[k]);
      sum += es.eigenvalues[k];
      ++count;
      ++k;
    }
    d.eigenvalues.push_back(sum / count);
    d.projectors.push_back(std::move(p));
    d.multiplicities.push_back(count);
  }
  return d;
}

ComplexMatrix matrix_function_from_spectrum(const SpectralDecomposition& d,
                                            const std::function<Complex(double)>& f) {
  ComplexMatrix out(d.dim());
  for (std::size_t k = 0; k < d.projectors.size(); ++k) out += f(d.eigenvalues[k]) * d.projectors[k];
  return out;
}

}  // namespace interlink
