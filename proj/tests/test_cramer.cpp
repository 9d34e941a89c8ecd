#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "partialcramer/cramer.hpp"
#include "partialcramer/determinant.hpp"
#include "partialcramer/oracle.hpp"

using namespace cramer;
using namespace testhelpers;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar::rational(n, d); }

SystemSpec chain_system(index_t n, std::vector<long long> masses, long long a) {
    std::vector<Scalar> rhs;
    for (long long m : masses) {
        rhs.push_back(q(m * a));
    }
    return SystemSpec(chain_matrix(n), ColumnVector(std::move(rhs)));
}

}  // namespace

TEST_CASE("solve_full on the identity returns the right-hand side") {
    std::mt19937_64 rng(21);
    for (index_t n : {1, 3, 6}) {
        ColumnVector b = random_int_vector(n, rng);
        FullSolution sol = solve_full(SystemSpec(Matrix::identity(n, ScalarKind::rational), b));
        CHECK(sol.x == b);
        CHECK(sol.det_r == q(1));
    }
}

TEST_CASE("solve_full on the chain gives suffix sums") {
    // T_i = (sum of masses from i on) * a; masses (1,2,3), a = 2.
    FullSolution sol = solve_full(chain_system(3, {1, 2, 3}, 2));
    CHECK(sol.x == ColumnVector({q(12), q(10), q(6)}));
    CHECK(sol.det_r == q(1));
}

TEST_CASE("solve_full rejects singular systems") {
    SystemSpec sys(make_matrix(2, 2, {q(1), q(1), q(1), q(1)}),
                   ColumnVector({q(1), q(2)}));
    CHECK_THROWS_AS(solve_full(sys), SingularMatrixError);
}

TEST_CASE("solutions are determinant ratios") {
    // Contract check against the naive n+1 determinant evaluations.
    std::mt19937_64 rng(22);
    for (int t = 0; t < 40; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 6);
        SystemSpec sys = random_nonsingular_system(n, rng);
        FullSolution sol = solve_full(sys);
        Scalar det = det_fast(sys.r());
        CHECK(sol.det_r == det);
        CHECK(sol.det_r == det_leibniz(sys.r()));
        for (index_t i = 1; i <= n; ++i) {
            CHECK(sol.x.at(i) == det_fast(replace_column(sys.r(), i, sys.x_prime())) / det);
        }
    }
}

TEST_CASE("solve_full matches the elimination oracle exactly") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 7);
        SystemSpec sys = random_nonsingular_system(n, rng);
        CHECK(solve_full(sys).x == solve_elimination(sys).x);
    }
}

TEST_CASE("residual of a solution is zero") {
    SystemSpec sys = chain_system(3, {1, 2, 3}, 2);
    ColumnVector r = residual(sys, ColumnVector({q(12), q(10), q(6)}));
    for (index_t i = 1; i <= 3; ++i) {
        CHECK(r.at(i) == q(0));
    }

    std::mt19937_64 rng(24);
    for (int t = 0; t < 30; ++t) {
        index_t n = 1 + static_cast<index_t>(rng() % 6);
        SystemSpec s = random_nonsingular_system(n, rng);
        ColumnVector rr = residual(s, solve_full(s).x);
        for (index_t i = 1; i <= n; ++i) {
            CHECK(rr.at(i) == q(0));
        }
    }

    SystemSpec zero(Matrix::identity(2, ScalarKind::rational), ColumnVector({q(0), q(0)}));
    CHECK(residual(zero, ColumnVector({q(0), q(0)})) == ColumnVector({q(0), q(0)}));

    CHECK_THROWS_AS(residual(sys, ColumnVector({q(1)})), DimensionError);
}

TEST_CASE("row scaling leaves the solution unchanged") {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 30; ++t) {
        index_t n = 2 + static_cast<index_t>(rng() % 5);
        SystemSpec sys = random_nonsingular_system(n, rng);
        index_t row = 1 + static_cast<index_t>(rng() % n);
        Scalar c = q(0);
        while (c.is_zero()) {
            c = random_rational_scalar(rng);
        }
        Matrix scaled_r = sys.r();
        for (index_t jj = 1; jj <= n; ++jj) {
            scaled_r.set(row, jj, c * sys.r().at(row, jj));
        }
        ColumnVector scaled_b = sys.x_prime();
        scaled_b.set(row, c * sys.x_prime().at(row));
        CHECK(solve_full(SystemSpec(scaled_r, scaled_b)).x == solve_full(sys).x);
    }
}

TEST_CASE("float systems solve within tolerance") {
    std::mt19937_64 rng(26);
    int done = 0;
    while (done < 30) {
        index_t n = 1 + static_cast<index_t>(rng() % 8);
        Matrix r = random_float_matrix(n, rng);
        if (std::fabs(det_fast(r).as_float()) <= 1e-6) {
            continue;
        }
        ColumnVector b = random_float_vector(n, rng);
        SystemSpec sys(r, b);
        FullSolution sol = solve_full(sys);
        ColumnVector res = residual(sys, sol.x);
        double res_norm = 0.0;
        double b_norm = 0.0;
        for (index_t i = 1; i <= n; ++i) {
            res_norm = std::max(res_norm, std::fabs(res.at(i).as_float()));
            b_norm = std::max(b_norm, std::fabs(b.at(i).as_float()));
        }
        CHECK(res_norm <= 1e-9 * (1.0 + b_norm));
        ++done;
    }
}

TEST_CASE("float singularity threshold") {
    // Exactly dependent rows: det is 0.0 and the solve must refuse.
    Matrix r = make_matrix(2, 2, {Scalar::float64(1), Scalar::float64(2),
                                  Scalar::float64(2), Scalar::float64(4)});
    SystemSpec sys(r, ColumnVector(2, ScalarKind::float64));
    CHECK_THROWS_AS(solve_full(sys), SingularMatrixError);

    SystemSpec ok(Matrix::identity(3, ScalarKind::float64),
                  ColumnVector(3, ScalarKind::float64));
    CHECK(solve_full(ok).det_r.as_float() == 1.0);

    // The cutoff is configurable; an absurd epsilon reclassifies the identity.
    SolveOptions opts;
    opts.float_det_epsilon = 10.0;
    CHECK_THROWS_AS(solve_full(ok, opts), SingularMatrixError);
}
