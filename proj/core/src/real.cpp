#include "deltaritz/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "deltaritz/errors.hpp"

namespace deltaritz {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw DomainError("not a decimal number: '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::grow_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  grow_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  if (rhs == 0) throw ArithmeticError("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::to_string(int significant) const {
  significant = std::max(significant, 1);
  char* buffer = nullptr;
  // '#' keeps trailing zeros so the digit count is fixed.
  if (mpfr_asprintf(&buffer, "%#.*RNg", significant, value_) < 0)
    throw ArithmeticError("failed to format value");
  std::string out(buffer);
  mpfr_free_str(buffer);
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sqrt(Real x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

bool identical(const Real& a, const Real& b) {
  if (a.precision() != b.precision()) return false;
  if (mpfr_nan_p(a.get()) || mpfr_nan_p(b.get())) return mpfr_nan_p(a.get()) && mpfr_nan_p(b.get());
  return mpfr_equal_p(a.get(), b.get()) && mpfr_signbit(a.get()) == mpfr_signbit(b.get());
}

}  // namespace deltaritz
