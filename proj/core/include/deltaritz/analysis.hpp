#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "deltaritz/assembly.hpp"
#include "deltaritz/eigensolver.hpp"
#include "deltaritz/potential.hpp"
#include "deltaritz/precision.hpp"

namespace deltaritz {

struct TableRow {
  std::size_t n;
  std::vector<Real> roots;  // min(k, n) lowest roots
};

struct ConvergenceTable {
  MonomialPotential potential;
  double g;
  double a;
  Sector sector;
  std::size_t k;
  std::vector<TableRow> rows;
  // Closed-form levels, present only for V = x^2/2.
  std::optional<std::vector<double>> exact_row;
};

// Lowest k roots for every basis size N = n_min..n_max.
ConvergenceTable convergence_table(const MonomialPotential& potential, double g, double a,
                                   std::size_t n_max, std::size_t k, const PrecisionContext& ctx,
                                   Sector sector = Sector::EvenAdapted, std::size_t n_min = 2);

// Lowest variational root W_0 for one (g, a, N).
Real ground_state_energy(const MonomialPotential& potential, double g, double a, std::size_t n,
                         const PrecisionContext& ctx);

struct CriticalCoupling {
  double g0;
  MonomialPotential potential;
  double a;
  std::size_t n;
  std::pair<double, double> bracket;  // final enclosing interval
  double tol;
};

// g0 with W_0(g0) = 0. W_0 is increasing in g (dE/dg = |psi(0)|^2 > 0), so the
// root is bracketed on W_0 itself rather than on det(H); the basis depends on g
// through u_1, so every evaluation re-assembles. Starts from [-2, 0] and
// widens the bracket if that fails.
CriticalCoupling critical_coupling(const MonomialPotential& potential, double a, std::size_t n,
                                   const PrecisionContext& ctx, double tol = 1e-12);

// -g^2/2 + Gamma(b+1) A |g|^{-b}: the first two terms of the large-|g|
// expansion of E_0 for V = A|x|^b. Requires g < 0 and a single-term potential.
double large_g_leading(const MonomialPotential& potential, double g);

// |psi(0)|^2 for the state `index` under full-line normalization:
// c_1^2 / (2 c^T S c). Zero in the odd sector.
Real psi0_density(const Spectrum& spectrum, const AssembledSystem& system, std::size_t index = 0);

struct HellmannFeynmanCheck {
  Real finite_difference;  // (W_0(g+h) - W_0(g-h)) / 2h
  Real density;            // |psi_0(0)|^2 at g
  Real residual;           // |finite_difference - density|
};

HellmannFeynmanCheck hellmann_feynman_check(const MonomialPotential& potential, double g, double a,
                                            std::size_t n, double h, const PrecisionContext& ctx,
                                            Sector sector = Sector::EvenAdapted);

Real hellmann_feynman_residual(const MonomialPotential& potential, double g, double a,
                               std::size_t n, double h, const PrecisionContext& ctx,
                               Sector sector = Sector::EvenAdapted);

struct SweepRow {
  double g;
  Real ground_state;
  // Two-term large-|g| value; empty for g >= 0 where it does not apply.
  std::optional<double> perturbative;
  // Expansion available and g <= -1.
  bool in_regime;
};

std::vector<SweepRow> sweep_ground_state(const MonomialPotential& potential, double a,
                                         std::size_t n, const std::vector<double>& g_grid,
                                         const PrecisionContext& ctx);

}  // namespace deltaritz
