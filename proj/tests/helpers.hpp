#pragma once

#include <random>
#include <vector>

#include "partialcramer/determinant.hpp"
#include "partialcramer/matrix.hpp"

namespace testhelpers {

using namespace cramer;

// Entries uniform over the integers in [-9, 9], the convention used by all
// randomized suites here. Seeds are fixed per test for reproducibility.

inline Scalar random_int_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(-9, 9);
    return Scalar::rational(d(rng));
}

inline Scalar random_rational_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    return Scalar::rational(num(rng), den(rng));
}

inline Scalar random_positive_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(1, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    return Scalar::rational(num(rng), den(rng));
}

inline Matrix random_int_matrix(index_t n, std::mt19937_64& rng) {
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (index_t k = 0; k < n * n; ++k) {
        entries.push_back(random_int_scalar(rng));
    }
    return Matrix(n, n, std::move(entries));
}

inline Matrix random_nonsingular_matrix(index_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_int_matrix(n, rng);
        if (!det_fast(m).is_zero()) {
            return m;
        }
    }
}

// Nonsingular with every leading principal minor nonzero.
inline Matrix random_all_minors_matrix(index_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_int_matrix(n, rng);
        MinorSequence ms = leading_minors(m);
        bool ok = true;
        for (const Scalar& v : ms.values) {
            if (v.is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return m;
        }
    }
}

inline ColumnVector random_int_vector(index_t n, std::mt19937_64& rng) {
    std::vector<Scalar> entries;
    entries.reserve(n);
    for (index_t k = 0; k < n; ++k) {
        entries.push_back(random_int_scalar(rng));
    }
    return ColumnVector(std::move(entries));
}

inline SystemSpec random_nonsingular_system(index_t n, std::mt19937_64& rng) {
    return SystemSpec(random_nonsingular_matrix(n, rng), random_int_vector(n, rng));
}

// Upper bidiagonal: 1 on the diagonal, -1 above it. Built by hand so tests
// of other modules do not lean on the model builder.
inline Matrix chain_matrix(index_t n, ScalarKind kind = ScalarKind::rational) {
    Matrix m(n, n, kind);
    for (index_t i = 1; i <= n; ++i) {
        m.set(i, i, Scalar::one(kind));
        if (i < n) {
            m.set(i, i + 1, -Scalar::one(kind));
        }
    }
    return m;
}

inline Matrix random_float_matrix(index_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (index_t k = 0; k < n * n; ++k) {
        entries.push_back(Scalar::float64(d(rng)));
    }
    return Matrix(n, n, std::move(entries));
}

inline ColumnVector random_float_vector(index_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Scalar> entries;
    entries.reserve(n);
    for (index_t k = 0; k < n; ++k) {
        entries.push_back(Scalar::float64(d(rng)));
    }
    return ColumnVector(std::move(entries));
}

}  // namespace testhelpers
