#include "deltaritz/matrix.hpp"

#include "deltaritz/errors.hpp"

namespace deltaritz {

Matrix::Matrix(std::size_t rows, std::size_t cols, mpfr_prec_t bits)
    : rows_(rows), cols_(cols), data_(rows * cols, Real(bits)) {}

Matrix Matrix::identity(std::size_t n, mpfr_prec_t bits) {
  Matrix out(n, n, bits);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Real(1L, bits);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, data_.empty() ? MPFR_PREC_MIN : data_.front().precision());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Real Matrix::norm_inf() const {
  Real best(data_.empty() ? MPFR_PREC_MIN : data_.front().precision());
  for (std::size_t i = 0; i < rows_; ++i) {
    Real row(best.precision());
    for (std::size_t j = 0; j < cols_; ++j) row += abs((*this)(i, j));
    if (row > best) best = row;
  }
  return best;
}

Real Matrix::asymmetry() const {
  if (!is_square()) throw DomainError("asymmetry of a non-square matrix");
  Real worst(data_.empty() ? MPFR_PREC_MIN : data_.front().precision());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j) {
      Real d = abs((*this)(i, j) - (*this)(j, i));
      if (d > worst) worst = d;
    }
  return worst;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_, a.data_.empty() ? MPFR_PREC_MIN : a.data_.front().precision());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Real> operator*(const Matrix& a, const std::vector<Real>& x) {
  if (a.cols_ != x.size()) throw DomainError("matrix-vector shape mismatch");
  std::vector<Real> out(a.rows_, Real(x.empty() ? MPFR_PREC_MIN : x.front().precision()));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
  return out;
}

Real dot(const std::vector<Real>& x, const std::vector<Real>& y) {
  if (x.size() != y.size()) throw DomainError("vector length mismatch");
  Real acc(x.empty() ? MPFR_PREC_MIN : x.front().precision());
  for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
  return acc;
}

Real bilinear(const std::vector<Real>& x, const Matrix& a, const std::vector<Real>& y) {
  return dot(x, a * y);
}

Real max_abs(const std::vector<Real>& x) {
  Real best(x.empty() ? MPFR_PREC_MIN : x.front().precision());
  for (const Real& v : x) {
    Real m = abs(v);
    if (m > best) best = m;
  }
  return best;
}

}  // namespace deltaritz
