#include "deltaritz/precision.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "deltaritz/errors.hpp"

namespace deltaritz {

namespace {
constexpr mpfr_prec_t kGuardBits = 16;
}

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw DomainError("precision must be between " + std::to_string(kMinDigits) + " and " +
                      std::to_string(kMaxDigits) + " decimal digits, got " +
                      std::to_string(digits));
  bits_ = static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0))) + kGuardBits;
}

Real PrecisionContext::eps() const { return ten_to_minus(digits_ - 1); }

Real PrecisionContext::ten_to_minus(int exponent) const {
  Real out(bits_);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent),
                 MPFR_RNDN);
  if (exponent >= 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

Real PrecisionContext::from_decimal(double value) const {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return Real(std::string(buffer, result.ptr), bits_);
}

}  // namespace deltaritz
