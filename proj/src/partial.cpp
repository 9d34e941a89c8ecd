#include "partialcramer/partial.hpp"

#include <string>
#include <utility>
#include <vector>

#include "partialcramer/determinant.hpp"

namespace cramer {

namespace {

bool minor_is_zero(const Scalar& d, const Matrix& block, const SolveOptions& opts) {
    if (d.kind() == ScalarKind::rational) {
        return d.is_zero();
    }
    return float_det_is_singular(d, block, opts.float_det_epsilon);
}

std::string zero_minor_message(index_t j) {
    return "leading principal minor D_" + std::to_string(j) +
           " is zero; the cut-" + std::to_string(j) + " maps do not exist";
}

}  // namespace

PerpContribution perp_contribution(const Matrix& r, index_t j) {
    if (!r.is_square()) {
        throw DimensionError("perp_contribution requires a square matrix");
    }
    const index_t n = r.rows();
    if (j < 1 || j > n) {
        throw DimensionError("cut index " + std::to_string(j) +
                             " out of range for n = " + std::to_string(n));
    }
    Matrix coeffs(j, n - j, r.kind());
    for (index_t i = 1; i <= j; ++i) {
        for (index_t k = j + 1; k <= n; ++k) {
            coeffs.set(i, k - j, r.at(i, k));
        }
    }
    return PerpContribution{j, std::move(coeffs)};
}

AffineSolution solve_partial(const SystemSpec& sys, index_t j, const SolveOptions& opts) {
    const index_t n = sys.n();
    const ScalarKind kind = sys.kind();
    if (j < 1 || j > n) {
        throw DimensionError("cut index " + std::to_string(j) +
                             " out of range for n = " + std::to_string(n));
    }

    const Matrix head = leading_submatrix(sys.r(), j);
    const Scalar d_j = det_fast(head);
    if (minor_is_zero(d_j, head, opts)) {
        throw ZeroLeadingMinorError(j, zero_minor_message(j));
    }

    // Column l of the primed block: the maps evaluated at X'_[j] = e_l.
    Matrix prime_coeffs(j, j, kind);
    for (index_t l = 1; l <= j; ++l) {
        ColumnVector unit(j, kind);
        unit.set(l, Scalar::one(kind));
        for (index_t i = 1; i <= j; ++i) {
            prime_coeffs.set(i, l, det_fast(replace_column(head, i, unit)) / d_j);
        }
    }

    // Column k-j of the tail block: the maps evaluated at the negated
    // coupling column of x_k.
    const PerpContribution perp = perp_contribution(sys.r(), j);
    Matrix tail_coeffs(j, n - j, kind);
    for (index_t k = j + 1; k <= n; ++k) {
        std::vector<Scalar> negated;
        negated.reserve(j);
        for (index_t i = 1; i <= j; ++i) {
            negated.push_back(-perp.coeffs.at(i, k - j));
        }
        ColumnVector v(std::move(negated));
        for (index_t i = 1; i <= j; ++i) {
            tail_coeffs.set(i, k - j, det_fast(replace_column(head, i, v)) / d_j);
        }
    }

    return AffineSolution{j, d_j, std::move(prime_coeffs), std::move(tail_coeffs)};
}

EliminationTrace eliminate_stepwise(const SystemSpec& sys, const SolveOptions& opts) {
    const index_t n = sys.n();
    const ScalarKind kind = sys.kind();
    const Matrix& r = sys.r();
    const Scalar one = Scalar::one(kind);

    EliminationTrace trace;
    Matrix prime(1, 1, kind);
    Matrix tail(1, n - 1, kind);
    Scalar d_prev = one;

    for (index_t j = 1; j <= n; ++j) {
        // Substitute the cut-(j-1) maps into equation j and collect the
        // coefficient of every remaining symbol. pivot is the x_j
        // coefficient, equal to D_j / D_{j-1}.
        std::vector<Scalar> prime_acc(j, Scalar::zero(kind));   // x'_1 .. x'_j
        std::vector<Scalar> tail_acc(n - j, Scalar::zero(kind));  // x_{j+1} .. x_n
        Scalar pivot = r.at(j, j);
        prime_acc[j - 1] = one;

        if (j > 1) {
            for (index_t k = 1; k < j; ++k) {
                const Scalar& rjk = r.at(j, k);
                for (index_t l = 1; l < j; ++l) {
                    prime_acc[l - 1] -= rjk * prime.at(k, l);
                }
                pivot += rjk * tail.at(k, 1);
                for (index_t t = j + 1; t <= n; ++t) {
                    tail_acc[t - j - 1] -= rjk * tail.at(k, t - j + 1);
                }
            }
        }
        for (index_t t = j + 1; t <= n; ++t) {
            tail_acc[t - j - 1] -= r.at(j, t);
        }

        const Scalar d_j = pivot * d_prev;
        if (minor_is_zero(d_j, leading_submatrix(r, j), opts)) {
            throw StepwiseZeroMinorError(j, zero_minor_message(j), std::move(trace));
        }

        Matrix new_prime(j, j, kind);
        Matrix new_tail(j, n - j, kind);
        for (index_t l = 1; l <= j; ++l) {
            new_prime.set(j, l, prime_acc[l - 1] / pivot);
        }
        for (index_t t = j + 1; t <= n; ++t) {
            new_tail.set(j, t - j, tail_acc[t - j - 1] / pivot);
        }

        // Back-substitute the fresh x_j map into the earlier rows.
        for (index_t i = 1; i < j; ++i) {
            const Scalar& via_xj = tail.at(i, 1);
            for (index_t l = 1; l < j; ++l) {
                new_prime.set(i, l, prime.at(i, l) + via_xj * new_prime.at(j, l));
            }
            new_prime.set(i, j, via_xj * new_prime.at(j, j));
            for (index_t t = j + 1; t <= n; ++t) {
                new_tail.set(i, t - j,
                             tail.at(i, t - j + 1) + via_xj * new_tail.at(j, t - j));
            }
        }

        prime = std::move(new_prime);
        tail = std::move(new_tail);
        d_prev = d_j;
        trace.steps.push_back(EliminationTrace::Step{j, d_j, AffineSolution{j, d_j, prime, tail}});
    }
    return trace;
}

std::pair<Scalar, Scalar> check_induction_identity(const Matrix& r, index_t p,
                                                   const ColumnVector& x,
                                                   const ColumnVector& x_prime) {
    if (!r.is_square()) {
        throw DimensionError("check_induction_identity requires a square matrix");
    }
    const index_t n = r.rows();
    if (p < 2 || p > n) {
        throw DimensionError("step index p must satisfy 2 <= p <= n");
    }
    if (x.dim() != n || x_prime.dim() != n) {
        throw DimensionError("point vectors must have dimension n");
    }
    if (x.kind() != r.kind() || x_prime.kind() != r.kind()) {
        throw ScalarKindError("point kind does not match matrix kind");
    }

    const MinorSequence minors = leading_minors(r);
    for (index_t k = 1; k < p; ++k) {
        if (minors.minor(k).is_zero()) {
            throw ZeroLeadingMinorError(k, zero_minor_message(k));
        }
    }
    const Scalar& d_prev = minors.minor(p - 1);
    const Scalar& d_p = minors.minor(p);

    Scalar row_sum = Scalar::zero(r.kind());
    for (index_t k = 1; k <= n; ++k) {
        row_sum += r.at(p, k) * x.at(k);
    }
    Scalar lhs = d_prev * (x_prime.at(p) - row_sum);

    // V = X'_[p] - X'_perp[p]
    std::vector<Scalar> v;
    v.reserve(p);
    for (index_t i = 1; i <= p; ++i) {
        Scalar acc = x_prime.at(i);
        for (index_t k = p + 1; k <= n; ++k) {
            acc -= r.at(i, k) * x.at(k);
        }
        v.push_back(std::move(acc));
    }
    const Matrix head = leading_submatrix(r, p);
    Scalar rhs = det_fast(replace_column(head, p, ColumnVector(std::move(v)))) - d_p * x.at(p);

    return {std::move(lhs), std::move(rhs)};
}

ConsistentPoint random_consistent_point(const Matrix& r, index_t p, std::mt19937_64& rng) {
    if (!r.is_square()) {
        throw DimensionError("random_consistent_point requires a square matrix");
    }
    const index_t n = r.rows();
    if (p < 2 || p > n) {
        throw DimensionError("step index p must satisfy 2 <= p <= n");
    }
    const ScalarKind kind = r.kind();

    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    auto draw = [&]() {
        return Scalar::rational(num(rng), den(rng)).to_kind(kind);
    };

    ColumnVector x_prime(n, kind);
    for (index_t i = 1; i <= n; ++i) {
        x_prime.set(i, draw());
    }
    ColumnVector x(n, kind);
    for (index_t i = p; i <= n; ++i) {
        x.set(i, draw());
    }

    // Derive x_1 .. x_{p-1} from the cut-(p-1) maps so the point satisfies
    // the identity's precondition.
    const AffineSolution maps = solve_partial(SystemSpec(r, x_prime), p - 1);
    std::vector<Scalar> prime_values;
    for (index_t l = 1; l < p; ++l) {
        prime_values.push_back(x_prime.at(l));
    }
    std::vector<Scalar> tail_values;
    for (index_t t = p; t <= n; ++t) {
        tail_values.push_back(x.at(t));
    }
    std::vector<Scalar> head = maps.evaluate(prime_values, tail_values);
    for (index_t i = 1; i < p; ++i) {
        x.set(i, head[i - 1]);
    }
    return ConsistentPoint{std::move(x), std::move(x_prime)};
}

ReorderedSystem reorder_for_nonzero_minors(const SystemSpec& sys, const SolveOptions& opts) {
    const index_t n = sys.n();
    const Matrix& r = sys.r();
    const ScalarKind kind = sys.kind();

    const Scalar full_det = det_fast(r);
    if (kind == ScalarKind::rational ? full_det.is_zero()
                                     : float_det_is_singular(full_det, r, opts.float_det_epsilon)) {
        throw SingularMatrixError("matrix is singular; no row order has nonzero minors");
    }

    // Greedy: extend the chosen rows one at a time, preferring the lowest
    // unused original index, so an already-valid ordering stays untouched.
    std::vector<index_t> perm;
    std::vector<bool> used(n + 1, false);
    for (index_t j = 1; j <= n; ++j) {
        bool placed = false;
        for (index_t cand = 1; cand <= n && !placed; ++cand) {
            if (used[cand]) {
                continue;
            }
            std::vector<Scalar> entries;
            entries.reserve(j * j);
            for (index_t i = 0; i + 1 < j; ++i) {
                for (index_t c = 1; c <= j; ++c) {
                    entries.push_back(r.at(perm[i], c));
                }
            }
            for (index_t c = 1; c <= j; ++c) {
                entries.push_back(r.at(cand, c));
            }
            Matrix block(j, j, std::move(entries));
            if (!minor_is_zero(det_fast(block), block, opts)) {
                perm.push_back(cand);
                used[cand] = true;
                placed = true;
            }
        }
        if (!placed) {
            // Unreachable for an invertible matrix.
            throw SingularMatrixError("no row extends the nonzero-minor prefix");
        }
    }

    Matrix pr(n, n, kind);
    ColumnVector px(n, kind);
    for (index_t i = 1; i <= n; ++i) {
        for (index_t c = 1; c <= n; ++c) {
            pr.set(i, c, r.at(perm[i - 1], c));
        }
        px.set(i, sys.x_prime().at(perm[i - 1]));
    }
    return ReorderedSystem{SystemSpec(std::move(pr), std::move(px)), std::move(perm)};
}

}  // namespace cramer
