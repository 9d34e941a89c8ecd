#pragma once

#include "partialcramer/matrix.hpp"

namespace cramer {

/// The leading principal minors D_1 .. D_n of a square matrix.
struct MinorSequence {
    std::vector<Scalar> values;
    index_t n;

    /// 1-based: minor(j) = det of the top-left j-by-j block.
    const Scalar& minor(index_t j) const;
};

/// Reference determinant: the signed sum over all permutations. Exact and
/// obviously correct, factorially slow; guarded at n <= 10. This is the
/// oracle the fast path is tested against.
Scalar det_leibniz(const Matrix& m);

/// Production determinant. Rational kind: fraction-free Bareiss elimination
/// with row swaps, so intermediates stay integral for integral input. Float
/// kind: LU with partial pivoting, sign corrected by permutation parity.
Scalar det_fast(const Matrix& m);

/// All leading principal minors in one fraction-free elimination pass
/// (the pivot at step j equals D_j). A zero pivot stops the shared pass;
/// the remaining minors are then computed per block so the full sequence,
/// zeros included, is still returned.
MinorSequence leading_minors(const Matrix& m);

}  // namespace cramer
