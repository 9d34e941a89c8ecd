#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "partialcramer/determinant.hpp"

using namespace cramer;
using namespace testhelpers;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar::rational(n, d); }

}  // namespace

TEST_CASE("det_leibniz on small fixed matrices") {
    // Two permutations: 1*1 - (-1)*0.
    CHECK(det_leibniz(make_matrix(2, 2, {q(1), q(-1), q(0), q(1)})) == q(1));

    for (index_t n : {1, 2, 3, 5, 7}) {
        CHECK(det_leibniz(Matrix::identity(n, ScalarKind::rational)) == q(1));
    }

    // Chain head with its first column replaced, at m = (1,2,3), a = 1,
    // T4 = 0: the value is (m1+m2+m3)a + T4 = 6.
    Matrix m = make_matrix(3, 3, {q(1), q(-1), q(0),
                                  q(2), q(1), q(-1),
                                  q(3), q(0), q(1)});
    CHECK(det_leibniz(m) == q(6));
}

TEST_CASE("det_leibniz guards") {
    CHECK_THROWS_AS(det_leibniz(Matrix(2, 3, ScalarKind::rational)), DimensionError);
    CHECK_THROWS_AS(det_leibniz(Matrix::identity(11, ScalarKind::rational)), DimensionError);
}

TEST_CASE("det_fast equals det_leibniz on random rational matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 120; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 7);
        Matrix m = random_int_matrix(n, rng);
        CHECK(det_fast(m) == det_leibniz(m));
    }
    // Rational (non-integer) entries as well.
    for (int t = 0; t < 40; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 5);
        std::vector<Scalar> entries;
        for (index_t k = 0; k < n * n; ++k) {
            entries.push_back(random_rational_scalar(rng));
        }
        Matrix m(n, n, std::move(entries));
        CHECK(det_fast(m) == det_leibniz(m));
    }
}

TEST_CASE("det_fast on structured matrices") {
    CHECK(det_fast(Matrix::identity(50, ScalarKind::rational)) == q(1));
    for (index_t n : {1, 2, 3, 10, 40}) {
        CHECK(det_fast(chain_matrix(n)) == q(1));
    }
    CHECK(det_fast(make_matrix(2, 2, {q(1), q(1), q(1), q(1)})) == q(0));
    // Needs a row swap before any pivot exists.
    CHECK(det_fast(make_matrix(2, 2, {q(0), q(1), q(1), q(0)})) == q(-1));
}

TEST_CASE("det_fast float path") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 6);
        Matrix m = random_float_matrix(n, rng);
        CHECK(approx_equal(det_fast(m).as_float(), det_leibniz(m).as_float()));
    }
    CHECK(det_fast(Matrix::identity(30, ScalarKind::float64)).as_float() == 1.0);
}

TEST_CASE("determinant is multilinear in a column") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 7);
        Matrix m = random_int_matrix(n, rng);
        index_t col = 1 + static_cast<index_t>(rng() % n);
        ColumnVector v1 = random_int_vector(n, rng);
        ColumnVector v2 = random_int_vector(n, rng);
        Scalar a1 = random_rational_scalar(rng);
        Scalar a2 = random_rational_scalar(rng);

        std::vector<Scalar> combo;
        for (index_t i = 1; i <= n; ++i) {
            combo.push_back(a1 * v1.at(i) + a2 * v2.at(i));
        }
        Scalar lhs = det_fast(replace_column(m, col, ColumnVector(std::move(combo))));
        Scalar rhs = a1 * det_fast(replace_column(m, col, v1)) +
                     a2 * det_fast(replace_column(m, col, v2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("column swap negates the determinant") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        index_t n = 2 + static_cast<index_t>(rng() % 6);
        Matrix m = random_int_matrix(n, rng);
        index_t c1 = 1 + static_cast<index_t>(rng() % n);
        index_t c2 = 1 + static_cast<index_t>(rng() % n);
        if (c1 == c2) {
            c2 = (c1 % n) + 1;
        }
        Matrix swapped = replace_column(replace_column(m, c1, ColumnVector(m.column(c2))),
                                        c2, ColumnVector(m.column(c1)));
        CHECK(det_fast(swapped) == -det_fast(m));
    }
}

TEST_CASE("det scales as c^n") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 30; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 5);
        Matrix m = random_int_matrix(n, rng);
        Scalar c = random_rational_scalar(rng);
        std::vector<Scalar> scaled;
        for (const Scalar& e : m.entries()) {
            scaled.push_back(c * e);
        }
        Scalar cn = Scalar::rational(1);
        for (index_t k = 0; k < n; ++k) {
            cn *= c;
        }
        CHECK(det_fast(Matrix(n, n, std::move(scaled))) == cn * det_fast(m));
    }
}

TEST_CASE("leading minors of fixed matrices") {
    MinorSequence chain = leading_minors(chain_matrix(7));
    REQUIRE(chain.n == 7);
    for (index_t j = 1; j <= 7; ++j) {
        CHECK(chain.minor(j) == q(1));
        CHECK(chain.minor(j) == det_leibniz(leading_submatrix(chain_matrix(7), j)));
    }

    MinorSequence diag = leading_minors(make_matrix(2, 2, {q(2), q(0), q(0), q(3)}));
    CHECK(diag.minor(1) == q(2));
    CHECK(diag.minor(2) == q(6));

    // D1 = 0 while D2 = -1: exercises the zero-minor fallback.
    MinorSequence anti = leading_minors(make_matrix(2, 2, {q(0), q(1), q(1), q(0)}));
    CHECK(anti.minor(1) == q(0));
    CHECK(anti.minor(2) == q(-1));
}

TEST_CASE("leading minors agree with per-block determinants") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 60; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 7);
        Matrix m = random_int_matrix(n, rng);
        // Half the trials force at least one vanishing minor.
        if (t % 2 == 0 && n >= 2) {
            index_t j = 1 + static_cast<index_t>(rng() % (n - 1));
            if (j == 1) {
                m.set(1, 1, q(0));
            } else {
                // Make row j a copy of row j-1 inside the leading block.
                for (index_t c = 1; c <= j; ++c) {
                    m.set(j, c, m.at(j - 1, c));
                }
            }
        }
        MinorSequence ms = leading_minors(m);
        REQUIRE(ms.n == n);
        for (index_t j = 1; j <= n; ++j) {
            CHECK(ms.minor(j) == det_leibniz(leading_submatrix(m, j)));
        }
    }
}

TEST_CASE("leading minors on the float kind") {
    MinorSequence ms = leading_minors(chain_matrix(5, ScalarKind::float64));
    for (index_t j = 1; j <= 5; ++j) {
        CHECK(ms.minor(j).as_float() == 1.0);
    }
    MinorSequence anti =
        leading_minors(make_matrix(2, 2, {Scalar::float64(0), Scalar::float64(1),
                                          Scalar::float64(1), Scalar::float64(0)}));
    CHECK(anti.minor(1).as_float() == 0.0);
    CHECK(anti.minor(2).as_float() == -1.0);
}
