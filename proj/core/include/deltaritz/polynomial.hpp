#pragma once

#include <cstddef>
#include <vector>

#include "deltaritz/real.hpp"
#include "deltaritz/special_functions.hpp"

namespace deltaritz {

// Dense polynomial in x with coefficients in ascending powers.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Real> coefficients);
  // c * x^power
  static Polynomial monomial(const Real& c, std::size_t power);

  const std::vector<Real>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.size() - 1; }
  const Real& coefficient(std::size_t power) const;  // zero-padded beyond degree
  const Real& at_zero() const { return coefficients_.front(); }
  mpfr_prec_t precision() const { return coefficients_.front().precision(); }

  Real evaluate(const Real& x) const;
  Polynomial derivative() const;
  Polynomial times_x() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Real& c, const Polynomial& p);

 private:
  std::vector<Real> coefficients_;
  Real zero_;
};

// integral_0^inf p(x) x^shift exp(-alpha x^2) dx using precomputed moments of alpha.
Real integrate_against_gaussian(const Polynomial& p, const MomentTable& moments, long shift = 0);

}  // namespace deltaritz
