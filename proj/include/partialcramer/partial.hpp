#pragma once

#include <random>
#include <utility>

#include "partialcramer/affine.hpp"
#include "partialcramer/cramer.hpp"

namespace cramer {

/// Thrown by eliminate_stepwise; carries the steps completed before the
/// vanishing minor was hit.
struct StepwiseZeroMinorError : ZeroLeadingMinorError {
    EliminationTrace partial_trace;

    StepwiseZeroMinorError(index_t j, const std::string& what, EliminationTrace trace)
        : ZeroLeadingMinorError(j, what), partial_trace(std::move(trace)) {}
};

/// The block of R coupling the tail unknowns into equations 1..j.
PerpContribution perp_contribution(const Matrix& r, index_t j);

/// Cramer's rule for the leading j unknowns: each x_i (i <= j) becomes an
/// affine map over x'_1..x'_j and x_{j+1}..x_n,
///
///   x_i = det(R^(i)_[jxj](X'_[j] - X'_perp[j])) / D_j,
///
/// with the coefficients extracted by multilinearity: substituting the unit
/// vector e_l for X'_[j] yields the x'_l column, substituting the negated
/// k-th coupling column yields the x_k column. Requires only D_j != 0; the
/// smaller minors are free to vanish.
AffineSolution solve_partial(const SystemSpec& sys, index_t j,
                             const SolveOptions& opts = {});

/// Staged elimination: produces the cut-1, cut-2, .., cut-n maps in order,
/// each stage substituting the previous maps into the next equation and
/// solving for one more unknown. Requires every leading minor D_1..D_n to be
/// nonzero; the final stage equals solve_full.
EliminationTrace eliminate_stepwise(const SystemSpec& sys,
                                    const SolveOptions& opts = {});

/// Both sides of the induction identity
///
///   D_{p-1} * (x'_p - sum_k R_pk x_k)
///     = det(R^(p)_[pxp](X'_[p] - X'_perp[p])) - D_p * x_p
///
/// evaluated at a concrete point. The caller must supply x_1..x_{p-1} that
/// satisfy the cut-(p-1) maps; x_p..x_n and x'_1..x'_p are free.
std::pair<Scalar, Scalar> check_induction_identity(const Matrix& r, index_t p,
                                                   const ColumnVector& x,
                                                   const ColumnVector& x_prime);

/// A random point satisfying the cut-(p-1) maps of r, for feeding
/// check_induction_identity. Free coordinates are drawn as small rationals
/// (or their float images) from the given generator.
struct ConsistentPoint {
    ColumnVector x;
    ColumnVector x_prime;
};
ConsistentPoint random_consistent_point(const Matrix& r, index_t p,
                                        std::mt19937_64& rng);

/// Row permutation repair for systems whose leading minors vanish. Returns
/// the permuted system (PR, Px') with all leading minors nonzero together
/// with the permutation: row i of the new system is row row_permutation[i-1]
/// of the original. Solving the permuted system yields the same unknowns;
/// only the equation labels move.
struct ReorderedSystem {
    SystemSpec system;
    std::vector<index_t> row_permutation;
};
ReorderedSystem reorder_for_nonzero_minors(const SystemSpec& sys,
                                           const SolveOptions& opts = {});

}  // namespace cramer
