#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deltaritz/assembly.hpp"
#include "deltaritz/matrix.hpp"
#include "deltaritz/precision.hpp"

namespace deltaritz {

// Variational roots W_0 <= W_1 <= ... and S-orthonormal coefficient vectors.
struct Spectrum {
  std::vector<Real> roots;
  std::vector<std::vector<Real>> vectors;
  // lambda_max(S) / lambda_min(S), when requested.
  std::optional<Real> gram_condition;

  std::size_t size() const { return roots.size(); }
};

struct SolveOptions {
  bool estimate_condition = true;
  int max_sweeps = 100;
};

// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
// Values come back in the order the rotations leave them on the diagonal;
// column k of `vectors` belongs to values[k].
struct SymmetricEigen {
  std::vector<Real> values;
  Matrix vectors;
};

SymmetricEigen jacobi_eigen(Matrix a, const PrecisionContext& ctx, int max_sweeps = 100);

// Lower-triangular L with S = L L^T. Unpivoted; throws IllConditionedBasisError
// carrying the 0-based pivot that failed.
Matrix cholesky(const Matrix& s);

// H c = W S c via Cholesky reduction to L^{-1} H L^{-T} y = W y, Jacobi, and
// back-substitution c = L^{-T} y. Roots ascending, ties kept in Jacobi order.
Spectrum solve_generalized(const AssembledSystem& system, const PrecisionContext& ctx,
                           const SolveOptions& options = {});

// Ratio of largest to smallest eigenvalue of a symmetric matrix.
Real condition_estimate(const Matrix& s, const PrecisionContext& ctx);

// max_ij |c_i^T S c_j - delta_ij|
Real s_orthonormality_error(const Spectrum& spectrum, const Matrix& s);
// ||H c - W S c||_inf / ||c||_inf for root j.
Real residual(const Spectrum& spectrum, const AssembledSystem& system, std::size_t j);

}  // namespace deltaritz
