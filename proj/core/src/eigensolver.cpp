#include "deltaritz/eigensolver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deltaritz/errors.hpp"

namespace deltaritz {

namespace {

Real off_diagonal_norm2(const Matrix& a) {
  Real acc(a(0, 0).precision());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) acc += a(i, j) * a(i, j);
  return acc * 2L;
}

Real frobenius_norm2(const Matrix& a) {
  Real acc(a(0, 0).precision());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * a(i, j);
  return acc;
}

void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const mpfr_prec_t bits = a(p, q).precision();
  const Real one(1L, bits);

  Real theta = (a(q, q) - a(p, p)) / (a(p, q) * 2L);
  Real t = one / (abs(theta) + sqrt(theta * theta + one));
  if (theta.sign() < 0) t = -t;
  const Real c = one / sqrt(t * t + one);
  const Real s = t * c;
  const Real tau = s / (one + c);
  const Real shift = t * a(p, q);

  a(p, p) -= shift;
  a(q, q) += shift;
  a(p, q) = Real(bits);
  a(q, p) = Real(bits);

  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const Real g = a(r, p);
    const Real h = a(r, q);
    a(r, p) = g - s * (h + g * tau);
    a(r, q) = h + s * (g - h * tau);
    a(p, r) = a(r, p);
    a(q, r) = a(r, q);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Real g = v(r, p);
    const Real h = v(r, q);
    v(r, p) = g - s * (h + g * tau);
    v(r, q) = h + s * (g - h * tau);
  }
}

// Solves L x = b in place.
void forward_substitute(const Matrix& l, std::vector<Real>& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= l(i, k) * b[k];
    b[i] /= l(i, i);
  }
}

// Solves L^T x = b in place.
void backward_substitute_transposed(const Matrix& l, std::vector<Real>& b) {
  for (std::size_t i = b.size(); i-- > 0;) {
    for (std::size_t k = i + 1; k < b.size(); ++k) b[i] -= l(k, i) * b[k];
    b[i] /= l(i, i);
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(Matrix a, const PrecisionContext& ctx, int max_sweeps) {
  if (!a.is_square() || a.rows() == 0) throw DomainError("jacobi_eigen needs a non-empty square matrix");
  const std::size_t n = a.rows();
  Matrix v = Matrix::identity(n, ctx.bits());

  const Real eps = ctx.eps();
  const Real target = frobenius_norm2(a) * eps * eps;

  int sweep = 0;
  while (off_diagonal_norm2(a) > target) {
    if (sweep++ >= max_sweeps)
      throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                             " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (!a(p, q).is_zero()) rotate(a, v, p, q);
  }

  std::vector<Real> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(a(i, i));
  return {std::move(values), std::move(v)};
}

Matrix cholesky(const Matrix& s) {
  if (!s.is_square()) throw DomainError("cholesky needs a square matrix");
  const std::size_t n = s.rows();
  Matrix l(n, n, s(0, 0).precision());
  for (std::size_t j = 0; j < n; ++j) {
    Real diagonal = s(j, j);
    for (std::size_t k = 0; k < j; ++k) diagonal -= l(j, k) * l(j, k);
    if (diagonal.sign() <= 0) throw IllConditionedBasisError(j);
    l(j, j) = sqrt(std::move(diagonal));
    for (std::size_t i = j + 1; i < n; ++i) {
      Real x = s(i, j);
      for (std::size_t k = 0; k < j; ++k) x -= l(i, k) * l(j, k);
      l(i, j) = x / l(j, j);
    }
  }
  return l;
}

Spectrum solve_generalized(const AssembledSystem& system, const PrecisionContext& ctx,
                           const SolveOptions& options) {
  const std::size_t n = system.size();
  const Matrix l = cholesky(system.s);

  // X = L^{-1} H column by column, then A = L^{-1} X^T = L^{-1} H L^{-T}.
  Matrix x(n, n, ctx.bits());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Real> column;
    column.reserve(n);
    for (std::size_t i = 0; i < n; ++i) column.push_back(system.h(i, j));
    forward_substitute(l, column);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = std::move(column[i]);
  }
  Matrix reduced(n, n, ctx.bits());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Real> column;
    column.reserve(n);
    for (std::size_t i = 0; i < n; ++i) column.push_back(x(j, i));
    forward_substitute(l, column);
    for (std::size_t i = 0; i < n; ++i) reduced(i, j) = std::move(column[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) reduced(j, i) = reduced(i, j);

  SymmetricEigen eig = jacobi_eigen(std::move(reduced), ctx, options.max_sweeps);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eig.values[a] < eig.values[b]; });

  Spectrum out;
  out.roots.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.roots.push_back(eig.values[k]);
    std::vector<Real> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(eig.vectors(i, k));
    backward_substitute_transposed(l, c);
    out.vectors.push_back(std::move(c));
  }
  if (options.estimate_condition) out.gram_condition = condition_estimate(system.s, ctx);
  return out;
}

Real condition_estimate(const Matrix& s, const PrecisionContext& ctx) {
  const SymmetricEigen eig = jacobi_eigen(s, ctx);
  const auto [lo, hi] = std::minmax_element(
      eig.values.begin(), eig.values.end(), [](const Real& a, const Real& b) { return a < b; });
  if (lo->sign() <= 0) throw IllConditionedBasisError(static_cast<std::size_t>(lo - eig.values.begin()));
  return *hi / *lo;
}

Real s_orthonormality_error(const Spectrum& spectrum, const Matrix& s) {
  Real worst(s(0, 0).precision());
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    for (std::size_t j = i; j < spectrum.size(); ++j) {
      Real e = bilinear(spectrum.vectors[i], s, spectrum.vectors[j]);
      if (i == j) e -= Real(1L, e.precision());
      e = abs(std::move(e));
      if (e > worst) worst = e;
    }
  return worst;
}

Real residual(const Spectrum& spectrum, const AssembledSystem& system, std::size_t j) {
  const auto& c = spectrum.vectors.at(j);
  std::vector<Real> hc = system.h * c;
  const std::vector<Real> sc = system.s * c;
  for (std::size_t i = 0; i < hc.size(); ++i) hc[i] -= spectrum.roots[j] * sc[i];
  return max_abs(hc) / max_abs(c);
}

}  // namespace deltaritz
