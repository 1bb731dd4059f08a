#pragma once

#include <vector>

#include "deltaritz/precision.hpp"
#include "deltaritz/real.hpp"

namespace deltaritz {

// Exact n/2 for integer n.
class HalfInteger {
 public:
  constexpr explicit HalfInteger(long twice_value) : twice_value_(twice_value) {}
  static constexpr HalfInteger from_integer(long n) { return HalfInteger(2 * n); }

  constexpr long twice_value() const { return twice_value_; }
  constexpr bool is_integer() const { return twice_value_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(twice_value_) / 2.0; }

  constexpr HalfInteger operator+(long n) const { return HalfInteger(twice_value_ + 2 * n); }
  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  long twice_value_;
};

// Gamma(z) for positive half-integer z at working precision, by upward
// recurrence from Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
Real gamma_half_integer(HalfInteger z, const PrecisionContext& ctx);

// Gamma(x) in double precision, reflection included. Throws PoleError at
// x = 0, -1, -2, ...
double gamma_real(double x);

// M(s, alpha) = integral_0^inf x^s exp(-alpha x^2) dx
//             = 1/2 alpha^{-(s+1)/2} Gamma((s+1)/2).
Real gaussian_moment(long s, const Real& alpha, const PrecisionContext& ctx);

// M(0..max_s, alpha) for one alpha.
class MomentTable {
 public:
  MomentTable(const Real& alpha, long max_s, const PrecisionContext& ctx);

  const Real& operator()(long s) const;
  long max_order() const { return static_cast<long>(moments_.size()) - 1; }

 private:
  std::vector<Real> moments_;
};

}  // namespace deltaritz
