#pragma once

// Arbitrary-precision real built on MPFR.
//
// Every value carries its own precision. Binary operations produce a result
// at the larger of the two operand precisions, so no thread-wide default is
// ever consulted.

#include <mpfr.h>

#include <compare>
#include <string>

namespace deltaritz {

class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(double value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const std::string& decimal, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

  // Decimal rendering with `significant` digits, trailing zeros kept.
  std::string to_string(int significant) const;

 private:
  void grow_to(mpfr_prec_t bits);
  mpfr_t value_;
};

Real abs(Real x);
Real sqrt(Real x);
Real pow(const Real& base, long exponent);
Real pi(mpfr_prec_t bits);

// Bitwise identity: same precision, same sign, same mantissa and exponent.
bool identical(const Real& a, const Real& b);

}  // namespace deltaritz
