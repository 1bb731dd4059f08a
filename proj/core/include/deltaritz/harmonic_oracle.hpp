#pragma once

#include <cstddef>
#include <vector>

namespace deltaritz {

// Closed-form reference for V = x^2/2 + g delta(x).
//
// The decaying solution of -psi''/2 + x^2 psi/2 = E psi is the parabolic
// cylinder function D_nu(sqrt(2) x), nu = E - 1/2. Its logarithmic
// derivative at the origin is
//   psi'(0+)/psi(0) = -2 Gamma(3/4 - E/2) / Gamma(1/4 - E/2),
// and the even-state cusp psi'(0+) = g psi(0) turns that into the
// quantization condition g = -2 Gamma(3/4 - E/2) / Gamma(1/4 - E/2).
// Odd states are untouched by the delta and sit at E = 2m + 3/2.

// g(E) from the relation above. Zero at E = 2m + 1/2 (the unperturbed even
// levels); PoleError at E = 2m + 3/2.
double harmonic_coupling_for_energy(double energy);

// The k lowest even-sector energies for strength g, relative accuracy 1e-12.
// Level m lies strictly between the odd levels 2m - 1/2 and 2m + 3/2 (m = 0:
// below 3/2), and g(E) increases monotonically across that interval.
std::vector<double> ho_exact_levels(double g, std::size_t k);

// The odd-sector energies 3/2, 7/2, ... (k of them).
std::vector<double> ho_odd_levels(std::size_t k);

// Strength at which the ground state crosses E = 0: -2 Gamma(3/4)/Gamma(1/4).
double ho_critical_coupling();

}  // namespace deltaritz
