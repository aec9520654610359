#pragma once

// Dense complex vectors and square matrices for the small dimensions used
// throughout the library (3, 4, 9, 16). Storage is row-major.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace interlink {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  ComplexVector(std::initializer_list<Complex> entries);
  explicit ComplexVector(std::vector<Complex> entries);

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  std::span<const Complex> entries() const { return data_; }

  double norm() const;
  // Throws ZeroVector when the norm vanishes.
  ComplexVector normalized() const;

  ComplexVector& operator*=(Complex s);
  ComplexVector& operator+=(const ComplexVector& o);
  ComplexVector& operator-=(const ComplexVector& o);

 private:
  std::vector<Complex> data_;
};

ComplexVector operator*(Complex s, ComplexVector v);
ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);

// <u|v>, conjugate-linear in the first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);
// Kronecker product of vectors, first factor major.
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // Zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  // Row-major rows; must be square.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  // |u><v|
  static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexVector column(std::size_t c) const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

// Block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);
// <u| A |v>
Complex sandwich(const ComplexVector& u, const ComplexMatrix& a, const ComplexVector& v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);
std::ostream& operator<<(std::ostream& os, const ComplexVector& v);

}  // namespace interlink
