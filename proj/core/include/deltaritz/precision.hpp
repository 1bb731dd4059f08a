#pragma once

#include <string>

#include "deltaritz/real.hpp"

namespace deltaritz {

// Working precision for a computation. Immutable; pass by value.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kMinDigits = 16;
  static constexpr int kMaxDigits = 200;

  explicit PrecisionContext(int digits = kDefaultDigits);

  int digits() const { return digits_; }
  // Binary precision carrying at least `digits` decimal digits plus guard bits.
  mpfr_prec_t bits() const { return bits_; }
  // Unit roundoff 10^(1-digits).
  Real eps() const;
  // 10^(-exponent) at working precision.
  Real ten_to_minus(int exponent) const;

  Real zero() const { return Real(bits_); }
  Real make(double value) const { return Real(value, bits_); }
  Real make(long value) const { return Real(value, bits_); }
  Real make(int value) const { return Real(static_cast<long>(value), bits_); }
  Real parse(const std::string& decimal) const { return Real(decimal, bits_); }
  // The decimal a user most likely meant: the shortest string that
  // round-trips to `value`, read at working precision (0.1 -> 1/10, not the
  // binary double nearest to it).
  Real from_decimal(double value) const;

 private:
  int digits_;
  mpfr_prec_t bits_;
};

}  // namespace deltaritz
