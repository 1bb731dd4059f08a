#include "deltaritz/special_functions.hpp"

#include <cmath>
#include <string>

#include "deltaritz/errors.hpp"

namespace deltaritz {

Real gamma_half_integer(HalfInteger z, const PrecisionContext& ctx) {
  if (z.twice_value() <= 0)
    throw DomainError("gamma_half_integer requires z > 0, got " + std::to_string(z.to_double()));

  // Seed at 1/2 or 1, then Gamma(k + 1) = k Gamma(k) with k carried as twice_k.
  long twice_k = z.is_integer() ? 2 : 1;
  Real value = z.is_integer() ? ctx.make(1) : sqrt(pi(ctx.bits()));
  for (; twice_k < z.twice_value(); twice_k += 2) {
    if (twice_k % 2 == 0) {
      value *= twice_k / 2;
    } else {
      value *= twice_k;
      value /= 2;
    }
  }
  return value;
}

double gamma_real(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_real requires a finite argument");
  if (x <= 0.0 && x == std::floor(x)) throw PoleError(x);
  const double value = std::tgamma(x);
  if (!std::isfinite(value)) throw ArithmeticError("gamma_real overflow at x = " + std::to_string(x));
  return value;
}

Real gaussian_moment(long s, const Real& alpha, const PrecisionContext& ctx) {
  if (s < 0) throw DomainError("gaussian_moment requires s >= 0");
  if (alpha.sign() <= 0) throw DomainError("gaussian_moment requires alpha > 0");

  Real inv_root = ctx.make(1) / sqrt(alpha);
  Real out = pow(inv_root, s + 1);
  out *= gamma_half_integer(HalfInteger(s + 1), ctx);
  out /= 2;
  return out;
}

MomentTable::MomentTable(const Real& alpha, long max_s, const PrecisionContext& ctx) {
  if (max_s < 0) throw DomainError("MomentTable requires max_s >= 0");
  moments_.reserve(static_cast<std::size_t>(max_s) + 1);
  for (long s = 0; s <= max_s; ++s) moments_.push_back(gaussian_moment(s, alpha, ctx));
}

const Real& MomentTable::operator()(long s) const {
  if (s < 0 || s > max_order())
    throw IndexError("moment order " + std::to_string(s) + " outside table of size " +
                     std::to_string(moments_.size()));
  return moments_[static_cast<std::size_t>(s)];
}

}  // namespace deltaritz
