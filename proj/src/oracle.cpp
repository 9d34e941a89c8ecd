#include "partialcramer/oracle.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace cramer {

namespace {

// Pick the pivot row at or below `col`: first nonzero entry for exact
// scalars, largest magnitude for floats. Returns row count when the whole
// column is zero.
index_t pick_pivot(const std::vector<std::vector<Scalar>>& a, index_t col, index_t nrows) {
    if (a[col][col].kind() == ScalarKind::rational) {
        for (index_t r = col; r < nrows; ++r) {
            if (!a[r][col].is_zero()) {
                return r;
            }
        }
        return nrows;
    }
    index_t best_row = nrows;
    double best = 0.0;
    for (index_t r = col; r < nrows; ++r) {
        double cand = std::fabs(a[r][col].as_float());
        if (cand > best) {
            best = cand;
            best_row = r;
        }
    }
    return best_row;
}

}  // namespace

OracleSolution solve_elimination(const SystemSpec& sys) {
    const index_t n = sys.n();
    const ScalarKind kind = sys.kind();

    std::vector<std::vector<Scalar>> a(n);
    for (index_t i = 0; i < n; ++i) {
        a[i].reserve(n + 1);
        for (index_t j = 1; j <= n; ++j) {
            a[i].push_back(sys.r().at(i + 1, j));
        }
        a[i].push_back(sys.x_prime().at(i + 1));
    }
    std::vector<index_t> order(n);
    std::iota(order.begin(), order.end(), index_t{1});

    for (index_t k = 0; k < n; ++k) {
        index_t p = pick_pivot(a, k, n);
        if (p == n) {
            throw SingularMatrixError("elimination found no usable pivot in column " +
                                      std::to_string(k + 1));
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            std::swap(order[p], order[k]);
        }
        for (index_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) {
                continue;
            }
            Scalar factor = a[i][k] / a[k][k];
            for (index_t j = k; j <= n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
    }

    ColumnVector x(n, kind);
    for (index_t ii = n; ii >= 1; --ii) {
        const index_t i = ii - 1;
        Scalar acc = a[i][n];
        for (index_t j = i + 1; j < n; ++j) {
            acc -= a[i][j] * x.at(j + 1);
        }
        x.set(ii, acc / a[i][i]);
    }
    return OracleSolution{std::move(x), std::move(order)};
}

AffineSolution partial_solve_by_substitution(const SystemSpec& sys, index_t j) {
    const index_t n = sys.n();
    const ScalarKind kind = sys.kind();
    if (j < 1 || j > n) {
        throw DimensionError("cut index " + std::to_string(j) +
                             " out of range for n = " + std::to_string(n));
    }

    // Rows are equations 1..j over the symbols (x'_1..x'_j, x_{j+1}..x_n):
    // head | unit columns | negated tail couplings.
    const index_t width = j + j + (n - j);
    std::vector<std::vector<Scalar>> a(j, std::vector<Scalar>(width, Scalar::zero(kind)));
    for (index_t i = 0; i < j; ++i) {
        for (index_t c = 0; c < j; ++c) {
            a[i][c] = sys.r().at(i + 1, c + 1);
        }
        a[i][j + i] = Scalar::one(kind);
        for (index_t k = j + 1; k <= n; ++k) {
            a[i][j + j + (k - j - 1)] = -sys.r().at(i + 1, k);
        }
    }

    // Forward pass with row swaps; the pivot product gives det of the head.
    Scalar det = Scalar::one(kind);
    bool negate = false;
    for (index_t k = 0; k < j; ++k) {
        index_t p = pick_pivot(a, k, j);
        if (p == j) {
            throw ZeroLeadingMinorError(j, "leading principal minor D_" + std::to_string(j) +
                                               " is zero; partial solve impossible");
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        det *= a[k][k];
        for (index_t i = k + 1; i < j; ++i) {
            if (a[i][k].is_zero()) {
                continue;
            }
            Scalar factor = a[i][k] / a[k][k];
            for (index_t c = k; c < width; ++c) {
                a[i][c] -= factor * a[k][c];
            }
        }
    }
    if (negate) {
        det = -det;
    }

    // Backward pass: normalize and clear above the diagonal.
    for (index_t kk = j; kk >= 1; --kk) {
        const index_t k = kk - 1;
        const Scalar pivot = a[k][k];
        for (index_t c = k; c < width; ++c) {
            a[k][c] /= pivot;
        }
        for (index_t i = 0; i < k; ++i) {
            if (a[i][k].is_zero()) {
                continue;
            }
            Scalar factor = a[i][k];
            for (index_t c = k; c < width; ++c) {
                a[i][c] -= factor * a[k][c];
            }
        }
    }

    Matrix prime_coeffs(j, j, kind);
    Matrix tail_coeffs(j, n - j, kind);
    for (index_t i = 0; i < j; ++i) {
        for (index_t c = 0; c < j; ++c) {
            prime_coeffs.set(i + 1, c + 1, a[i][j + c]);
        }
        for (index_t c = 0; c < n - j; ++c) {
            tail_coeffs.set(i + 1, c + 1, a[i][j + j + c]);
        }
    }
    return AffineSolution{j, std::move(det), std::move(prime_coeffs), std::move(tail_coeffs)};
}

}  // namespace cramer
