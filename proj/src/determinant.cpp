#include "partialcramer/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace cramer {

const Scalar& MinorSequence::minor(index_t j) const {
    if (j < 1 || j > n) {
        throw DimensionError("minor index out of range");
    }
    return values[j - 1];
}

namespace {

void require_square(const Matrix& m, const char* op) {
    if (!m.is_square()) {
        throw DimensionError(std::string(op) + " requires a square matrix");
    }
}

// Parity of a permutation by inversion count; fine at oracle sizes.
int permutation_sign(const std::vector<index_t>& perm) {
    int inversions = 0;
    for (index_t a = 0; a < perm.size(); ++a) {
        for (index_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// Fraction-free elimination determinant over exact scalars. Row swaps flip
// the sign; a column with no usable pivot means det = 0.
Scalar det_bareiss(const Matrix& m) {
    const index_t n = m.rows();
    std::vector<BigRational> a;
    a.reserve(n * n);
    for (const Scalar& e : m.entries()) {
        a.push_back(e.as_rational());
    }
    auto at = [&](index_t i, index_t j) -> BigRational& { return a[i * n + j]; };

    bool negate = false;
    BigRational prev(1);
    for (index_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            index_t r = k + 1;
            while (r < n && at(r, k) == 0) {
                ++r;
            }
            if (r == n) {
                return Scalar::rational(0);
            }
            for (index_t j = k; j < n; ++j) {
                std::swap(at(k, j), at(r, j));
            }
            negate = !negate;
        }
        for (index_t i = k + 1; i < n; ++i) {
            for (index_t j = k + 1; j < n; ++j) {
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    BigRational det = at(n - 1, n - 1);
    return Scalar::rational(negate ? -det : det);
}

// Partial-pivot LU determinant for the float kind.
Scalar det_float(const Matrix& m) {
    const index_t n = m.rows();
    std::vector<double> a;
    a.reserve(n * n);
    for (const Scalar& e : m.entries()) {
        a.push_back(e.as_float());
    }
    auto at = [&](index_t i, index_t j) -> double& { return a[i * n + j]; };

    double det = 1.0;
    for (index_t k = 0; k < n; ++k) {
        index_t pivot_row = k;
        double best = std::fabs(at(k, k));
        for (index_t r = k + 1; r < n; ++r) {
            if (std::fabs(at(r, k)) > best) {
                best = std::fabs(at(r, k));
                pivot_row = r;
            }
        }
        if (best == 0.0) {
            return Scalar::float64(0.0);
        }
        if (pivot_row != k) {
            for (index_t j = k; j < n; ++j) {
                std::swap(at(k, j), at(pivot_row, j));
            }
            det = -det;
        }
        det *= at(k, k);
        for (index_t i = k + 1; i < n; ++i) {
            double factor = at(i, k) / at(k, k);
            for (index_t j = k + 1; j < n; ++j) {
                at(i, j) -= factor * at(k, j);
            }
            at(i, k) = 0.0;
        }
    }
    return Scalar::float64(det);
}

}  // namespace

Scalar det_leibniz(const Matrix& m) {
    require_square(m, "det_leibniz");
    const index_t n = m.rows();
    if (n > 10) {
        throw DimensionError("det_leibniz is limited to n <= 10 (got n = " +
                             std::to_string(n) + ")");
    }
    std::vector<index_t> perm(n);
    std::iota(perm.begin(), perm.end(), index_t{1});

    Scalar sum = Scalar::zero(m.kind());
    do {
        Scalar term = Scalar::one(m.kind());
        for (index_t i = 1; i <= n; ++i) {
            term *= m.at(i, perm[i - 1]);
        }
        sum += permutation_sign(perm) < 0 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

Scalar det_fast(const Matrix& m) {
    require_square(m, "det_fast");
    return m.kind() == ScalarKind::rational ? det_bareiss(m) : det_float(m);
}

MinorSequence leading_minors(const Matrix& m) {
    require_square(m, "leading_minors");
    const index_t n = m.rows();
    std::vector<Scalar> minors;
    minors.reserve(n);

    // Shared fraction-free pass without pivoting: after eliminating below
    // row j, the (j+1)-th diagonal entry is exactly D_{j+1}. Works for the
    // float kind too, where it is plain Gaussian elimination scaled by the
    // previous pivot.
    Matrix a = m;
    Scalar prev = Scalar::one(m.kind());
    for (index_t j = 1; j <= n; ++j) {
        Scalar pivot = a.at(j, j);
        minors.push_back(pivot);
        if (pivot.is_zero()) {
            for (index_t k = j + 1; k <= n; ++k) {
                minors.push_back(det_fast(leading_submatrix(m, k)));
            }
            return MinorSequence{std::move(minors), n};
        }
        if (j < n) {
            for (index_t i = j + 1; i <= n; ++i) {
                for (index_t c = j + 1; c <= n; ++c) {
                    a.set(i, c, (pivot * a.at(i, c) - a.at(i, j) * a.at(j, c)) / prev);
                }
                a.set(i, j, Scalar::zero(m.kind()));
            }
            prev = pivot;
        }
    }
    return MinorSequence{std::move(minors), n};
}

}  // namespace cramer
