#pragma once

#include <cstddef>

#include "deltaritz/matrix.hpp"
#include "deltaritz/polynomial.hpp"
#include "deltaritz/potential.hpp"
#include "deltaritz/precision.hpp"

namespace deltaritz {

enum class Sector {
  // u_1 = (1 + g x) e^{-a x^2/2}, u_j = x^j e^{-a x^2/2} (j >= 2): every
  // function satisfies u'(0+) = g u(0).
  EvenAdapted,
  // u_j = x^j e^{-a x^2/2} (j >= 1): Dirichlet at the origin, blind to g.
  Odd,
};

const char* to_string(Sector sector);

struct BasisSpec {
  double width = 1.0;     // a in exp(-a x^2 / 2)
  std::size_t size = 1;   // number of basis functions N
  double coupling = 0.0;  // delta strength g; unused in the odd sector
  Sector sector = Sector::EvenAdapted;

  void validate() const;
};

// u_j(x) = p(x) e^{-a x^2/2} and u_j'(x) = q(x) e^{-a x^2/2} on x > 0.
struct BasisFunction {
  Polynomial p;
  Polynomial q;
};

// j is 1-based, 1 <= j <= spec.size.
BasisFunction basis_polynomial(std::size_t j, const BasisSpec& spec, const PrecisionContext& ctx);

// How the kinetic energy is written on the half-line.
enum class KineticForm {
  // 1/2 <u_i'|u_j'> plus the delta boundary term (g/2) u_i(0) u_j(0).
  FirstDerivative,
  // -1/2 <u_i|u_j''>. Integration by parts leaves the flux 1/2 u_i(0) u_j'(0)
  // inside this integral, which equals the delta term whenever u_j'(0) = g u_j(0).
  SecondDerivative,
};

// H = kinetic + potential + boundary.
struct HamiltonianParts {
  Matrix kinetic;
  Matrix potential;
  Matrix boundary;
};

struct AssembledSystem {
  Matrix h;
  Matrix s;
  HamiltonianParts parts;
  BasisSpec spec;
  MonomialPotential potential;
  KineticForm form;

  std::size_t size() const { return spec.size; }
};

// Half-line Rayleigh-Ritz matrices for V + g delta(x), every entry a finite
// sum of Gaussian moments M(s, a).
//
// For even psi on the full line the Rayleigh quotient is
//   [2 int_0^inf (psi'^2/2 + V psi^2) + g psi(0)^2] / [2 int_0^inf psi^2],
// so the half-line matrices carry the delta as (g/2) u_i(0) u_j(0).
AssembledSystem assemble(const MonomialPotential& potential, const BasisSpec& spec,
                         const PrecisionContext& ctx,
                         KineticForm form = KineticForm::FirstDerivative);

}  // namespace deltaritz
