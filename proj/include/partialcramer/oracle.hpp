#pragma once

#include "partialcramer/affine.hpp"

namespace cramer {

// Independent reference solvers used to validate the determinant-based
// implementations. Deliberately self-contained: nothing here touches the
// determinant or cramer modules.

struct OracleSolution {
    ColumnVector x;
    std::vector<index_t> pivot_permutation;  // row order used, 1-based
};

/// Row reduction with row interchanges (largest pivot for floats, first
/// nonzero for exact scalars) and back-substitution.
OracleSolution solve_elimination(const SystemSpec& sys);

/// Schoolbook partial solve: augment equations 1..j with one unit column
/// per primed value and one negated coupling column per tail unknown, then
/// reduce the j x j head block to the identity. The surviving right-hand
/// block holds the affine coefficients.
AffineSolution partial_solve_by_substitution(const SystemSpec& sys, index_t j);

}  // namespace cramer
