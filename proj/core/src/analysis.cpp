#include "deltaritz/analysis.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "deltaritz/errors.hpp"
#include "deltaritz/harmonic_oracle.hpp"
#include "deltaritz/special_functions.hpp"

namespace deltaritz {

ConvergenceTable convergence_table(const MonomialPotential& potential, double g, double a,
                                   std::size_t n_max, std::size_t k, const PrecisionContext& ctx,
                                   Sector sector, std::size_t n_min) {
  if (k < 1 || n_max < k) throw DomainError("convergence_table requires n_max >= k >= 1");
  if (n_min < 1 || n_min > n_max) throw DomainError("convergence_table requires 1 <= n_min <= n_max");

  ConvergenceTable table{potential, g, a, sector, k, {}, std::nullopt};
  table.rows.reserve(n_max - n_min + 1);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const BasisSpec spec{a, n, g, sector};
    const AssembledSystem system = assemble(potential, spec, ctx);
    Spectrum spectrum = solve_generalized(system, ctx, {.estimate_condition = false});
    const std::size_t kept = std::min(k, n);
    spectrum.roots.resize(kept, Real(ctx.bits()));
    table.rows.push_back({n, std::move(spectrum.roots)});
  }
  if (potential.is_unit_harmonic())
    table.exact_row = sector == Sector::EvenAdapted ? ho_exact_levels(g, k) : ho_odd_levels(k);
  return table;
}

Real ground_state_energy(const MonomialPotential& potential, double g, double a, std::size_t n,
                         const PrecisionContext& ctx) {
  const AssembledSystem system = assemble(potential, BasisSpec{a, n, g, Sector::EvenAdapted}, ctx);
  return solve_generalized(system, ctx, {.estimate_condition = false}).roots.front();
}

CriticalCoupling critical_coupling(const MonomialPotential& potential, double a, std::size_t n,
                                   const PrecisionContext& ctx, double tol) {
  if (!(tol > 0.0)) throw DomainError("critical_coupling requires tol > 0");
  auto w0 = [&](double g) { return ground_state_energy(potential, g, a, n, ctx).to_double(); };

  double lo = -2.0;
  double hi = 0.0;
  double flo = w0(lo);
  double fhi = w0(hi);
  for (int expand = 0; flo > 0.0; ++expand) {
    if (expand >= 8) throw RootFindingError("W0(g) stays positive; no critical coupling found", lo, hi);
    hi = lo;
    fhi = flo;
    lo *= 2.0;
    flo = w0(lo);
  }
  for (int expand = 0; fhi < 0.0; ++expand) {
    if (expand >= 8) throw RootFindingError("W0(g) stays negative; no critical coupling found", lo, hi);
    lo = hi;
    flo = fhi;
    hi = hi == 0.0 ? 1.0 : hi * 2.0;
    fhi = w0(hi);
  }

  if (flo == 0.0) return {lo, potential, a, n, {lo, lo}, tol};
  if (fhi == 0.0) return {hi, potential, a, n, {hi, hi}, tol};

  std::uintmax_t iterations = 100;
  auto width_ok = [tol](double l, double h) { return h - l <= tol; };
  const auto [l, h] = boost::math::tools::toms748_solve(w0, lo, hi, flo, fhi, width_ok, iterations);
  if (iterations >= 100 && h - l > tol)
    throw RootFindingError("critical coupling did not converge", l, h);
  return {l + (h - l) / 2.0, potential, a, n, {l, h}, tol};
}

double large_g_leading(const MonomialPotential& potential, double g) {
  if (!potential.is_monomial())
    throw UnsupportedError("large-|g| expansion is only available for a single monomial A|x|^b");
  if (!(g < 0.0)) throw DomainError("large-|g| expansion requires g < 0");
  const auto& term = potential.terms().front();
  const double b = term.exponent;
  return -g * g / 2.0 + gamma_real(b + 1.0) * term.coefficient * std::pow(std::abs(g), -b);
}

Real psi0_density(const Spectrum& spectrum, const AssembledSystem& system, std::size_t index) {
  if (system.spec.sector == Sector::Odd) return Real(system.s(0, 0).precision());
  const auto& c = spectrum.vectors.at(index);
  // u_1(0) = 1 and u_j(0) = 0 for j >= 2, so psi(0) = c_1.
  Real norm = bilinear(c, system.s, c) * 2L;
  return c.front() * c.front() / norm;
}

HellmannFeynmanCheck hellmann_feynman_check(const MonomialPotential& potential, double g, double a,
                                            std::size_t n, double h, const PrecisionContext& ctx,
                                            Sector sector) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  auto lowest = [&](double coupling) {
    const AssembledSystem system = assemble(potential, BasisSpec{a, n, coupling, sector}, ctx);
    return solve_generalized(system, ctx, {.estimate_condition = false}).roots.front();
  };
  const Real step = ctx.from_decimal(h);
  Real slope = (lowest(g + h) - lowest(g - h)) / (step * 2L);

  const AssembledSystem system = assemble(potential, BasisSpec{a, n, g, sector}, ctx);
  const Spectrum spectrum = solve_generalized(system, ctx, {.estimate_condition = false});
  Real density = psi0_density(spectrum, system, 0);
  Real residual = abs(slope - density);
  return {std::move(slope), std::move(density), std::move(residual)};
}

Real hellmann_feynman_residual(const MonomialPotential& potential, double g, double a,
                               std::size_t n, double h, const PrecisionContext& ctx, Sector sector) {
  return hellmann_feynman_check(potential, g, a, n, h, ctx, sector).residual;
}

std::vector<SweepRow> sweep_ground_state(const MonomialPotential& potential, double a,
                                         std::size_t n, const std::vector<double>& g_grid,
                                         const PrecisionContext& ctx) {
  std::vector<SweepRow> rows;
  rows.reserve(g_grid.size());
  for (double g : g_grid) {
    if (!std::isfinite(g)) throw DomainError("sweep grid contains a non-finite g");
    std::optional<double> perturbative;
    if (potential.is_monomial() && g < 0.0) perturbative = large_g_leading(potential, g);
    const bool in_regime = perturbative.has_value() && g <= -1.0;
    rows.push_back({g, ground_state_energy(potential, g, a, n, ctx), perturbative, in_regime});
  }
  return rows;
}

}  // namespace deltaritz
