#pragma once

#include "partialcramer/matrix.hpp"

namespace cramer {

/// n blocks of the given masses pulled in a row at a common acceleration.
/// Unknowns are the rope tensions T_1..T_n; equation i is Newton's second
/// law for block i, giving the upper bidiagonal system
///
///   T_i - T_{i+1} = m_i a  (i < n),   T_n = m_n a.
struct ChainSpec {
    std::vector<Scalar> masses;
    Scalar acceleration;

    ChainSpec(std::vector<Scalar> masses_, Scalar acceleration_);

    index_t n() const { return static_cast<index_t>(masses.size()); }
    ScalarKind kind() const { return acceleration.kind(); }
};

SystemSpec build_chain_system(const ChainSpec& spec);

/// T_i = (m_i + m_{i+1} + ... + m_n) * a: each rope carries the total mass
/// behind it.
ColumnVector chain_closed_form(const ChainSpec& spec);

/// The inverse of the chain matrix: upper triangular, all ones.
Matrix chain_inverse_matrix(index_t n, ScalarKind kind = ScalarKind::rational);

}  // namespace cramer
