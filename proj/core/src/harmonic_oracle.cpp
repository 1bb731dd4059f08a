#include "deltaritz/harmonic_oracle.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "deltaritz/errors.hpp"
#include "deltaritz/special_functions.hpp"

namespace deltaritz {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// 1/Gamma(x), entire.
double reciprocal_gamma(double x) { return is_nonpositive_integer(x) ? 0.0 : 1.0 / gamma_real(x); }

}  // namespace

double harmonic_coupling_for_energy(double energy) {
  const double upper = 0.75 - energy / 2.0;
  const double lower = 0.25 - energy / 2.0;
  if (is_nonpositive_integer(upper)) throw PoleError(energy);
  // Deep below zero both gammas overflow separately; their ratio does not.
  if (lower > 100.0) return -2.0 * std::exp(std::lgamma(upper) - std::lgamma(lower));
  return -2.0 * gamma_real(upper) * reciprocal_gamma(lower);
}

std::vector<double> ho_exact_levels(double g, std::size_t k) {
  if (k < 1) throw DomainError("ho_exact_levels requires k >= 1");
  if (!std::isfinite(g)) throw DomainError("ho_exact_levels requires finite g");

  auto f = [g](double e) { return harmonic_coupling_for_energy(e) - g; };
  // Inside the open interval between poles, pulling the ends in until the
  // signs are right (the root can sit arbitrarily close to a pole for huge |g|).
  auto inset = [&](double pole, double direction) {
    for (double delta = 1e-3; delta >= 1e-14; delta /= 10.0) {
      const double e = pole + direction * delta;
      const double value = f(e);
      if (direction > 0 ? value < 0 : value > 0) return e;
    }
    return std::numeric_limits<double>::quiet_NaN();
  };

  std::vector<double> levels;
  levels.reserve(k);
  for (std::size_t m = 0; m < k; ++m) {
    const double hi_pole = 2.0 * static_cast<double>(m) + 1.5;
    double lo = 0.0;
    if (m == 0) {
      // strongly attractive delta: E0 ~ -g^2/2
      lo = g < 0.0 ? std::min(-1.0, -g * g) : -1.0;
      for (int expand = 0; f(lo) >= 0.0; ++expand) {
        if (expand > 60) throw RootFindingError("no lower bracket for harmonic ground state", lo, hi_pole);
        lo *= 2.0;
      }
    } else {
      lo = inset(hi_pole - 2.0, +1.0);
    }
    const double hi = inset(hi_pole, -1.0);
    if (std::isnan(lo) || std::isnan(hi))
      throw RootFindingError("harmonic level " + std::to_string(m) + " not bracketed",
                             hi_pole - 2.0, hi_pole);

    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) {
      levels.push_back(lo);
      continue;
    }
    if (fhi == 0.0) {
      levels.push_back(hi);
      continue;
    }
    std::uintmax_t iterations = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(48), iterations);
    if (iterations >= 200)
      throw RootFindingError("harmonic level " + std::to_string(m) + " did not converge", lo, hi);
    levels.push_back(a + (b - a) / 2.0);
  }
  return levels;
}

std::vector<double> ho_odd_levels(std::size_t k) {
  std::vector<double> levels;
  levels.reserve(k);
  for (std::size_t m = 0; m < k; ++m) levels.push_back(2.0 * static_cast<double>(m) + 1.5);
  return levels;
}

double ho_critical_coupling() { return harmonic_coupling_for_energy(0.0); }

}  // namespace deltaritz
