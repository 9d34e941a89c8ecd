#pragma once

#include <vector>

#include "partialcramer/matrix.hpp"

namespace cramer {

/// The j x (n-j) block R_ik with i <= j < k: the coefficients through which
/// the tail unknowns x_{j+1} .. x_n feed into the first j transformed values.
/// Empty (zero columns) when j = n.
struct PerpContribution {
    index_t j;
    Matrix coeffs;
};

/// Affine maps for a cut at index j: for i = 1..j,
///
///   x_i = sum_l prime_coeffs(i, l) * x'_l  +  sum_k tail_coeffs(i, k-j) * x_k
///
/// with l = 1..j and k = j+1..n. d_j is the leading principal minor the maps
/// were divided by; it is nonzero whenever the maps exist.
struct AffineSolution {
    index_t j;
    Scalar d_j;
    Matrix prime_coeffs;  // j x j
    Matrix tail_coeffs;   // j x (n-j), zero columns when j = n

    index_t n() const { return j + tail_coeffs.cols(); }

    /// Evaluate the maps at concrete values: prime_values has j entries,
    /// tail_values n-j. Returns x_1 .. x_j.
    std::vector<Scalar> evaluate(const std::vector<Scalar>& prime_values,
                                 const std::vector<Scalar>& tail_values) const;

    bool operator==(const AffineSolution& other) const;
    bool operator!=(const AffineSolution& other) const { return !(*this == other); }
};

/// One record per elimination stage j = 1..n.
struct EliminationTrace {
    struct Step {
        index_t j;
        Scalar minor;
        AffineSolution solution;
    };

    std::vector<Step> steps;
};

}  // namespace cramer
