#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "partialcramer/matrix.hpp"

using namespace cramer;
using namespace testhelpers;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar::rational(n, d); }

}  // namespace

TEST_CASE("make_matrix basics") {
    Matrix m = make_matrix(1, 1, {q(5)});
    CHECK(m.rows() == 1);
    CHECK(m.at(1, 1) == q(5));

    // The 2x2 upper bidiagonal block of the chain system.
    Matrix block = make_matrix(2, 2, {q(1), q(-1), q(0), q(1)});
    CHECK(block == leading_submatrix(chain_matrix(5), 2));

    CHECK_THROWS_AS(make_matrix(2, 3, {q(1), q(2), q(3), q(4)}), DimensionError);
    CHECK_THROWS_AS(make_matrix(0, 1, {}), DimensionError);
    CHECK_THROWS_AS(make_matrix(1, 2, {q(1), Scalar::float64(2.0)}), ScalarKindError);
}

TEST_CASE("leading_submatrix") {
    std::mt19937_64 rng(2);
    Matrix m = random_int_matrix(5, rng);
    CHECK(leading_submatrix(m, 5) == m);

    Matrix expected = make_matrix(3, 3, {q(1), q(-1), q(0),
                                         q(0), q(1), q(-1),
                                         q(0), q(0), q(1)});
    CHECK(leading_submatrix(chain_matrix(4), 3) == expected);

    Matrix one = make_matrix(1, 1, {q(2)});
    CHECK(leading_submatrix(one, 1) == one);

    CHECK_THROWS_AS(leading_submatrix(m, 0), DimensionError);
    CHECK_THROWS_AS(leading_submatrix(m, 6), DimensionError);
    CHECK_THROWS_AS(leading_submatrix(Matrix(2, 3, ScalarKind::rational), 2), DimensionError);

    // Composition: cutting twice equals cutting once.
    for (index_t k = 1; k <= 5; ++k) {
        for (index_t j = 1; j <= k; ++j) {
            CHECK(leading_submatrix(leading_submatrix(m, k), j) == leading_submatrix(m, j));
        }
    }
}

TEST_CASE("replace_column") {
    Matrix i2 = Matrix::identity(2, ScalarKind::rational);
    ColumnVector ab({q(7), q(11)});
    Matrix replaced = replace_column(i2, 1, ab);
    CHECK(replaced == make_matrix(2, 2, {q(7), q(0), q(11), q(1)}));
    CHECK(i2 == Matrix::identity(2, ScalarKind::rational));  // source untouched

    std::mt19937_64 rng(3);
    Matrix m = random_int_matrix(4, rng);
    for (index_t i = 1; i <= 4; ++i) {
        CHECK(replace_column(m, i, ColumnVector(m.column(i))) == m);
    }

    // Restoring the original column undoes the replacement.
    for (int t = 0; t < 25; ++t) {
        Matrix a = random_int_matrix(4, rng);
        index_t i = 1 + static_cast<index_t>(t % 4);
        ColumnVector v = random_int_vector(4, rng);
        Matrix meddled = replace_column(a, i, v);
        CHECK(replace_column(meddled, i, ColumnVector(a.column(i))) == a);
    }

    CHECK_THROWS_AS(replace_column(m, 5, random_int_vector(4, rng)), DimensionError);
    CHECK_THROWS_AS(replace_column(m, 1, random_int_vector(3, rng)), DimensionError);
}

TEST_CASE("system spec validation") {
    Matrix m = Matrix::identity(2, ScalarKind::rational);
    CHECK_THROWS_AS(SystemSpec(Matrix(2, 3, ScalarKind::rational),
                               ColumnVector(2, ScalarKind::rational)),
                    DimensionError);
    CHECK_THROWS_AS(SystemSpec(m, ColumnVector(3, ScalarKind::rational)), DimensionError);
    CHECK_THROWS_AS(SystemSpec(m, ColumnVector(2, ScalarKind::float64)), ScalarKindError);
    SystemSpec ok(m, ColumnVector(2, ScalarKind::rational));
    CHECK(ok.n() == 2);
}

TEST_CASE("1-based access is bounds checked") {
    Matrix m = Matrix::identity(3, ScalarKind::rational);
    CHECK(m.at(1, 1) == q(1));
    CHECK(m.at(1, 2) == q(0));
    CHECK_THROWS_AS(m.at(0, 1), DimensionError);
    CHECK_THROWS_AS(m.at(1, 4), DimensionError);
    ColumnVector v(3, ScalarKind::rational);
    CHECK_THROWS_AS(v.at(0), DimensionError);
    CHECK_THROWS_AS(v.at(4), DimensionError);
}
