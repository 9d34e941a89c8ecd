#pragma once

#include "partialcramer/matrix.hpp"

namespace cramer {

struct SolveOptions {
    /// Float systems count as singular when |det| <= eps * max(1, max|entry|)^n.
    /// Heuristic; exact systems use det == 0 and ignore this.
    double float_det_epsilon = 1e-12;
};

/// Solution of the full system together with det(R), which is nonzero by
/// construction (a singular system throws instead).
struct FullSolution {
    ColumnVector x;
    Scalar det_r;
};

/// Classical Cramer's rule: x_i = det(R with column i replaced by x') / det(R).
/// The ratios are evaluated through one shared elimination of R rather than
/// n+1 independent determinants; the results are identical.
FullSolution solve_full(const SystemSpec& sys, const SolveOptions& opts = {});

/// x' - R x.
ColumnVector residual(const SystemSpec& sys, const ColumnVector& x);

/// The singularity cutoff used for float determinants.
bool float_det_is_singular(const Scalar& det, const Matrix& m, double eps);

}  // namespace cramer
