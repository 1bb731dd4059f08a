#include "deltaritz/polynomial.hpp"

#include <algorithm>

#include "deltaritz/errors.hpp"

namespace deltaritz {

Polynomial::Polynomial(std::vector<Real> coefficients)
    : coefficients_(std::move(coefficients)), zero_(MPFR_PREC_MIN) {
  if (coefficients_.empty()) throw DomainError("polynomial needs at least one coefficient");
  zero_ = Real(coefficients_.front().precision());
}

Polynomial Polynomial::monomial(const Real& c, std::size_t power) {
  std::vector<Real> coefficients(power + 1, Real(c.precision()));
  coefficients[power] = c;
  return Polynomial(std::move(coefficients));
}

const Real& Polynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : zero_;
}

Real Polynomial::evaluate(const Real& x) const {
  Real acc = coefficients_.back();
  for (std::size_t k = coefficients_.size() - 1; k-- > 0;) {
    acc *= x;
    acc += coefficients_[k];
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() == 1) return Polynomial({Real(precision())});
  std::vector<Real> out;
  out.reserve(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k)
    out.push_back(coefficients_[k] * static_cast<long>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::times_x() const {
  std::vector<Real> out;
  out.reserve(coefficients_.size() + 1);
  out.emplace_back(precision());
  out.insert(out.end(), coefficients_.begin(), coefficients_.end());
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coefficients_.size(), b.coefficients_.size());
  std::vector<Real> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(a.coefficient(k) + b.coefficient(k));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coefficients_.size(), b.coefficients_.size());
  std::vector<Real> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(a.coefficient(k) - b.coefficient(k));
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const mpfr_prec_t bits = std::max(a.precision(), b.precision());
  std::vector<Real> out(a.coefficients_.size() + b.coefficients_.size() - 1, Real(bits));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      if (b.coefficients_[j].is_zero()) continue;
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Real& c, const Polynomial& p) {
  std::vector<Real> out;
  out.reserve(p.coefficients_.size());
  for (const Real& x : p.coefficients_) out.push_back(c * x);
  return Polynomial(std::move(out));
}

Real integrate_against_gaussian(const Polynomial& p, const MomentTable& moments, long shift) {
  Real acc(p.precision());
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    acc += cs[k] * moments(static_cast<long>(k) + shift);
  }
  return acc;
}

}  // namespace deltaritz
