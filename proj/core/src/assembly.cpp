#include "deltaritz/assembly.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "deltaritz/errors.hpp"

namespace deltaritz {

const char* to_string(Sector sector) {
  return sector == Sector::EvenAdapted ? "even" : "odd";
}

void BasisSpec::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("basis width a must be positive");
  if (size < 1) throw DomainError("basis size N must be at least 1");
  if (!std::isfinite(coupling)) throw DomainError("delta strength g must be finite");
}

namespace {

Polynomial derivative_factor(const Polynomial& p, const Real& width) {
  // d/dx [p e^{-a x^2/2}] = (p' - a x p) e^{-a x^2/2}
  return p.derivative() - width * p.times_x();
}

}  // namespace

BasisFunction basis_polynomial(std::size_t j, const BasisSpec& spec, const PrecisionContext& ctx) {
  if (j < 1 || j > spec.size)
    throw IndexError("basis index " + std::to_string(j) + " outside 1.." +
                     std::to_string(spec.size));
  const Real width = ctx.from_decimal(spec.width);
  if (spec.sector == Sector::EvenAdapted && j == 1) {
    Polynomial p({ctx.make(1), ctx.from_decimal(spec.coupling)});
    Polynomial q = derivative_factor(p, width);
    return {std::move(p), std::move(q)};
  }
  Polynomial p = Polynomial::monomial(ctx.make(1), j);
  Polynomial q = derivative_factor(p, width);
  return {std::move(p), std::move(q)};
}

AssembledSystem assemble(const MonomialPotential& potential, const BasisSpec& spec,
                         const PrecisionContext& ctx, KineticForm form) {
  spec.validate();
  const std::size_t n = spec.size;
  const mpfr_prec_t bits = ctx.bits();
  const Real width = ctx.from_decimal(spec.width);

  std::vector<BasisFunction> basis;
  basis.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) basis.push_back(basis_polynomial(j, spec, ctx));

  // u_j'' = r_j e^{-a x^2/2}
  std::vector<Polynomial> second;
  if (form == KineticForm::SecondDerivative) {
    second.reserve(n);
    for (const auto& f : basis) second.push_back(derivative_factor(f.q, width));
  }

  std::vector<Real> coefficients;
  for (const auto& term : potential.terms()) coefficients.push_back(ctx.from_decimal(term.coefficient));

  // Products of two basis Gaussians give exp(-a x^2), i.e. alpha = a.
  const long max_order = 2 * static_cast<long>(n) + 2 + potential.max_exponent();
  const MomentTable moments(width, max_order, ctx);

  Matrix s(n, n, bits);
  HamiltonianParts parts{Matrix(n, n, bits), Matrix(n, n, bits), Matrix(n, n, bits)};
  const bool delta_term = spec.sector == Sector::EvenAdapted && form == KineticForm::FirstDerivative;
  const Real half_coupling = ctx.from_decimal(spec.coupling) / 2;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Polynomial pp = basis[i].p * basis[j].p;
      s(i, j) = integrate_against_gaussian(pp, moments);

      if (form == KineticForm::FirstDerivative) {
        parts.kinetic(i, j) = integrate_against_gaussian(basis[i].q * basis[j].q, moments) / 2;
      } else {
        parts.kinetic(i, j) = -(integrate_against_gaussian(basis[i].p * second[j], moments) / 2);
      }

      Real v(bits);
      for (std::size_t t = 0; t < coefficients.size(); ++t)
        v += coefficients[t] * integrate_against_gaussian(pp, moments, potential.terms()[t].exponent);
      parts.potential(i, j) = std::move(v);

      if (delta_term) parts.boundary(i, j) = half_coupling * basis[i].p.at_zero() * basis[j].p.at_zero();

      if (i != j) {
        s(j, i) = s(i, j);
        parts.kinetic(j, i) = parts.kinetic(i, j);
        parts.potential(j, i) = parts.potential(i, j);
        parts.boundary(j, i) = parts.boundary(i, j);
      }
    }
  }

  Matrix h = parts.kinetic + parts.potential + parts.boundary;
  return AssembledSystem{std::move(h), std::move(s), std::move(parts), spec, potential, form};
}

}  // namespace deltaritz
