#pragma once

#include <cstddef>
#include <vector>

#include "deltaritz/real.hpp"

namespace deltaritz {

// Dense row-major matrix of Real. Small sizes only (n <= a few dozen).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, mpfr_prec_t bits);
  static Matrix identity(std::size_t n, mpfr_prec_t bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  // Largest absolute row sum.
  Real norm_inf() const;
  // max_ij |a_ij - a_ji|
  Real asymmetry() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Real> operator*(const Matrix& a, const std::vector<Real>& x);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Real> data_;
};

Real dot(const std::vector<Real>& x, const std::vector<Real>& y);
// x^T A y
Real bilinear(const std::vector<Real>& x, const Matrix& a, const std::vector<Real>& y);
Real max_abs(const std::vector<Real>& x);

}  // namespace deltaritz
