#include "partialcramer/cramer.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace cramer {

bool float_det_is_singular(const Scalar& det, const Matrix& m, double eps) {
    double max_entry = 0.0;
    for (const Scalar& e : m.entries()) {
        max_entry = std::max(max_entry, std::fabs(e.as_float()));
    }
    double scale = std::pow(std::max(1.0, max_entry), static_cast<double>(m.rows()));
    return std::fabs(det.as_float()) <= eps * scale;
}

namespace {

// Forward elimination of the augmented system [R | x'], fraction-free for
// the rational kind, partial pivoting for floats. Returns det(R) and leaves
// an upper-triangular system behind for back-substitution.
struct Eliminated {
    std::vector<Scalar> a;  // row-major n x (n+1)
    Scalar det;
};

Eliminated eliminate_augmented(const SystemSpec& sys) {
    const index_t n = sys.n();
    const ScalarKind kind = sys.kind();
    const bool exact = kind == ScalarKind::rational;
    const index_t w = n + 1;

    std::vector<Scalar> a;
    a.reserve(n * w);
    for (index_t i = 1; i <= n; ++i) {
        for (index_t j = 1; j <= n; ++j) {
            a.push_back(sys.r().at(i, j));
        }
        a.push_back(sys.x_prime().at(i));
    }
    auto at = [&](index_t i, index_t j) -> Scalar& { return a[i * w + j]; };

    bool negate = false;
    Scalar prev = Scalar::one(kind);
    Scalar det = Scalar::zero(kind);
    for (index_t k = 0; k < n; ++k) {
        index_t pivot_row = k;
        if (exact) {
            while (pivot_row < n && at(pivot_row, k).is_zero()) {
                ++pivot_row;
            }
            if (pivot_row == n) {
                return {std::move(a), Scalar::zero(kind)};
            }
        } else {
            double best = std::fabs(at(k, k).as_float());
            for (index_t r = k + 1; r < n; ++r) {
                double cand = std::fabs(at(r, k).as_float());
                if (cand > best) {
                    best = cand;
                    pivot_row = r;
                }
            }
            if (best == 0.0) {
                return {std::move(a), Scalar::zero(kind)};
            }
        }
        if (pivot_row != k) {
            for (index_t j = k; j < w; ++j) {
                std::swap(at(k, j), at(pivot_row, j));
            }
            negate = !negate;
        }
        const Scalar pivot = at(k, k);
        for (index_t i = k + 1; i < n; ++i) {
            if (exact) {
                for (index_t j = k + 1; j < w; ++j) {
                    at(i, j) = (pivot * at(i, j) - at(i, k) * at(k, j)) / prev;
                }
            } else {
                Scalar factor = at(i, k) / pivot;
                for (index_t j = k + 1; j < w; ++j) {
                    at(i, j) -= factor * at(k, j);
                }
            }
            at(i, k) = Scalar::zero(kind);
        }
        if (exact) {
            prev = pivot;
            det = pivot;  // after the last step this is D_n of the swapped matrix
        } else {
            det = k == 0 ? pivot : det * pivot;
        }
    }
    if (negate) {
        det = -det;
    }
    return {std::move(a), std::move(det)};
}

}  // namespace

FullSolution solve_full(const SystemSpec& sys, const SolveOptions& opts) {
    const index_t n = sys.n();
    const ScalarKind kind = sys.kind();

    Eliminated e = eliminate_augmented(sys);
    if (kind == ScalarKind::rational ? e.det.is_zero()
                                     : float_det_is_singular(e.det, sys.r(), opts.float_det_epsilon)) {
        throw SingularMatrixError("matrix is singular: det(R) = " + e.det.to_string());
    }

    const index_t w = n + 1;
    auto at = [&](index_t i, index_t j) -> const Scalar& { return e.a[i * w + j]; };

    ColumnVector x(n, kind);
    for (index_t ii = n; ii >= 1; --ii) {
        const index_t i = ii - 1;
        Scalar acc = at(i, n);
        for (index_t j = i + 1; j < n; ++j) {
            acc -= at(i, j) * x.at(j + 1);
        }
        x.set(ii, acc / at(i, i));
    }
    return FullSolution{std::move(x), std::move(e.det)};
}

ColumnVector residual(const SystemSpec& sys, const ColumnVector& x) {
    if (x.dim() != sys.n()) {
        throw DimensionError("solution vector dimension does not match system");
    }
    if (x.kind() != sys.kind()) {
        throw ScalarKindError("solution vector kind does not match system");
    }
    ColumnVector rx = multiply(sys.r(), x);
    ColumnVector out(sys.n(), sys.kind());
    for (index_t i = 1; i <= sys.n(); ++i) {
        out.set(i, sys.x_prime().at(i) - rx.at(i));
    }
    return out;
}

}  // namespace cramer
