#include "interlink/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "interlink/errors.hpp"

namespace interlink {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFinite("non-finite entry in complex vector/matrix");
    }
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace

// ---- ComplexVector -------------------------------------------------------

ComplexVector::ComplexVector(std::size_t dim) : data_(dim) {}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : data_(entries) {
  require_finite(data_);
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  require_finite(data_);
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw ZeroVector("cannot normalize a zero vector");
  ComplexVector out = *this;
  out *= 1.0 / n;
  return out;
}

ComplexVector& ComplexVector::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& o) {
  require_same_dim(dim(), o.dim(), "vector add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& o) {
  require_same_dim(dim(), o.dim(), "vector subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexVector operator*(Complex s, ComplexVector v) { return v *= s; }
ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// ---- ComplexMatrix -------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("matrix rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) throw DimensionMismatch("row-major data is not dim*dim");
  require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  require_finite(diag);
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "outer product");
  ComplexMatrix m(u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(dim_, o.dim_, "matrix add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(dim_, o.dim_, "matrix subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
  require_same_dim(a.dim(), v.dim(), "matrix-vector product");
  ComplexVector out(v.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < a.dim(); ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix m(da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb) m(ia * db + ib, ja * db + jb) = s * b(ib, jb);
    }
  return m;
}

Complex trace(const ComplexMatrix& a) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

Complex sandwich(const ComplexVector& u, const ComplexMatrix& a, const ComplexVector& v) {
  return inner(u, a * v);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c)
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return max_abs_diff(a.adjoint() * a, ComplexMatrix::identity(a.dim())) <= tol;
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const ComplexVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

}  // namespace interlink
