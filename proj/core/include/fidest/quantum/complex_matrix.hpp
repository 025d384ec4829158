#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fidest {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sizes in this library are tiny (d <= 16,
// permanents up to 30x30), so no expression templates or BLAS.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill = {});

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Largest |a_ij - conj(a_ji)| over the matrix.
double hermiticity_defect(const ComplexMatrix& m);

// Square d x d Hermitian matrix. Construction validates Hermiticity.
class HermitianMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  // Throws ValidationError when the input is not square or deviates from
  // Hermitian by more than tol * max(1, max|a_ij|).
  explicit HermitianMatrix(ComplexMatrix m, double tol = kTolerance);

  // Projects onto the Hermitian part, (m + m^dagger) / 2, without validation.
  static HermitianMatrix hermitize(const ComplexMatrix& m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix scaled(double s) const;

 private:
  struct Trusted {};
  HermitianMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

}  // namespace fidest
