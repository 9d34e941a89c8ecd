#include "partialcramer/affine.hpp"

#include <string>

namespace cramer {

std::vector<Scalar> AffineSolution::evaluate(const std::vector<Scalar>& prime_values,
                                             const std::vector<Scalar>& tail_values) const {
    if (prime_values.size() != j) {
        throw DimensionError("expected " + std::to_string(j) + " primed values, got " +
                             std::to_string(prime_values.size()));
    }
    if (tail_values.size() != tail_coeffs.cols()) {
        throw DimensionError("expected " + std::to_string(tail_coeffs.cols()) +
                             " tail values, got " + std::to_string(tail_values.size()));
    }
    const ScalarKind kind = prime_coeffs.kind();
    std::vector<Scalar> out;
    out.reserve(j);
    for (index_t i = 1; i <= j; ++i) {
        Scalar acc = Scalar::zero(kind);
        for (index_t l = 1; l <= j; ++l) {
            acc += prime_coeffs.at(i, l) * prime_values[l - 1];
        }
        for (index_t c = 1; c <= tail_coeffs.cols(); ++c) {
            acc += tail_coeffs.at(i, c) * tail_values[c - 1];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool AffineSolution::operator==(const AffineSolution& other) const {
    return j == other.j && d_j == other.d_j && prime_coeffs == other.prime_coeffs &&
           tail_coeffs == other.tail_coeffs;
}

}  // namespace cramer
