#include "partialcramer/models.hpp"

#include <utility>

namespace cramer {

ChainSpec::ChainSpec(std::vector<Scalar> masses_, Scalar acceleration_)
    : masses(std::move(masses_)), acceleration(std::move(acceleration_)) {
    if (masses.empty()) {
        throw DimensionError("chain model needs at least one mass");
    }
    const ScalarKind k = acceleration.kind();
    for (const Scalar& m : masses) {
        if (m.kind() != k) {
            throw ScalarKindError("chain masses and acceleration use different scalar kinds");
        }
        bool positive = k == ScalarKind::rational ? m.as_rational() > 0 : m.as_float() > 0.0;
        if (!positive) {
            throw Error("chain masses must be positive, got " + m.to_string());
        }
    }
}

SystemSpec build_chain_system(const ChainSpec& spec) {
    const index_t n = spec.n();
    const ScalarKind kind = spec.kind();
    Matrix r(n, n, kind);
    ColumnVector rhs(n, kind);
    for (index_t i = 1; i <= n; ++i) {
        r.set(i, i, Scalar::one(kind));
        if (i < n) {
            r.set(i, i + 1, -Scalar::one(kind));
        }
        rhs.set(i, spec.masses[i - 1] * spec.acceleration);
    }
    return SystemSpec(std::move(r), std::move(rhs));
}

ColumnVector chain_closed_form(const ChainSpec& spec) {
    const index_t n = spec.n();
    ColumnVector t(n, spec.kind());
    Scalar suffix = Scalar::zero(spec.kind());
    for (index_t i = n; i >= 1; --i) {
        suffix += spec.masses[i - 1];
        t.set(i, suffix * spec.acceleration);
    }
    return t;
}

Matrix chain_inverse_matrix(index_t n, ScalarKind kind) {
    if (n < 1) {
        throw DimensionError("chain size must be at least 1");
    }
    Matrix m(n, n, kind);
    for (index_t i = 1; i <= n; ++i) {
        for (index_t j = i; j <= n; ++j) {
            m.set(i, j, Scalar::one(kind));
        }
    }
    return m;
}

}  // namespace cramer
