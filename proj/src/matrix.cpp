#include "partialcramer/matrix.hpp"

#include <string>
#include <utility>

namespace cramer {

namespace {

ScalarKind check_uniform_kind(const std::vector<Scalar>& entries) {
    ScalarKind kind = entries.front().kind();
    for (const Scalar& e : entries) {
        if (e.kind() != kind) {
            throw ScalarKindError("mixed scalar kinds in one container");
        }
    }
    return kind;
}

}  // namespace

Matrix::Matrix(index_t rows, index_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), kind_(ScalarKind::rational), entries_(std::move(entries)) {
    if (rows_ < 1) {
        throw DimensionError("matrix needs at least one row");
    }
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix with " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " shape requires " +
                             std::to_string(rows_ * cols_) + " entries, got " +
                             std::to_string(entries_.size()));
    }
    if (!entries_.empty()) {
        kind_ = check_uniform_kind(entries_);
    }
}

Matrix::Matrix(index_t rows, index_t cols, ScalarKind kind)
    : rows_(rows), cols_(cols), kind_(kind), entries_(rows * cols, Scalar::zero(kind)) {
    if (rows_ < 1) {
        throw DimensionError("matrix needs at least one row");
    }
}

Matrix Matrix::identity(index_t n, ScalarKind kind) {
    Matrix m(n, n, kind);
    for (index_t i = 1; i <= n; ++i) {
        m.set(i, i, Scalar::one(kind));
    }
    return m;
}

const Scalar& Matrix::at(index_t i, index_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw DimensionError("matrix index (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") out of range for " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return entries_[(i - 1) * cols_ + (j - 1)];
}

void Matrix::set(index_t i, index_t j, Scalar value) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw DimensionError("matrix index out of range");
    }
    if (value.kind() != kind_) {
        throw ScalarKindError("entry kind does not match matrix kind");
    }
    entries_[(i - 1) * cols_ + (j - 1)] = std::move(value);
}

std::vector<Scalar> Matrix::column(index_t j) const {
    if (j < 1 || j > cols_) {
        throw DimensionError("column index out of range");
    }
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (index_t i = 1; i <= rows_; ++i) {
        out.push_back(at(i, j));
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || kind_ != other.kind_) {
        return false;
    }
    for (index_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] != other.entries_[k]) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::to_kind(ScalarKind kind) const {
    if (kind == kind_) {
        return *this;
    }
    Matrix out(rows_, cols_, kind);
    for (index_t i = 1; i <= rows_; ++i) {
        for (index_t j = 1; j <= cols_; ++j) {
            out.set(i, j, at(i, j).to_kind(kind));
        }
    }
    return out;
}

ColumnVector::ColumnVector(std::vector<Scalar> entries)
    : kind_(ScalarKind::rational), entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DimensionError("column vector needs at least one entry");
    }
    kind_ = check_uniform_kind(entries_);
}

ColumnVector::ColumnVector(index_t dim, ScalarKind kind)
    : kind_(kind), entries_(dim, Scalar::zero(kind)) {
    if (dim < 1) {
        throw DimensionError("column vector needs at least one entry");
    }
}

const Scalar& ColumnVector::at(index_t i) const {
    if (i < 1 || i > dim()) {
        throw DimensionError("vector index " + std::to_string(i) +
                             " out of range for dimension " + std::to_string(dim()));
    }
    return entries_[i - 1];
}

void ColumnVector::set(index_t i, Scalar value) {
    if (i < 1 || i > dim()) {
        throw DimensionError("vector index out of range");
    }
    if (value.kind() != kind_) {
        throw ScalarKindError("entry kind does not match vector kind");
    }
    entries_[i - 1] = std::move(value);
}

bool ColumnVector::operator==(const ColumnVector& other) const {
    if (dim() != other.dim() || kind_ != other.kind_) {
        return false;
    }
    for (index_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] != other.entries_[k]) {
            return false;
        }
    }
    return true;
}

ColumnVector ColumnVector::to_kind(ScalarKind kind) const {
    if (kind == kind_) {
        return *this;
    }
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const Scalar& e : entries_) {
        out.push_back(e.to_kind(kind));
    }
    return ColumnVector(std::move(out));
}

SystemSpec::SystemSpec(Matrix r, ColumnVector x_prime)
    : r_(std::move(r)), x_prime_(std::move(x_prime)) {
    if (!r_.is_square()) {
        throw DimensionError("system matrix must be square");
    }
    if (r_.rows() != x_prime_.dim()) {
        throw DimensionError("system matrix is " + std::to_string(r_.rows()) +
                             "x" + std::to_string(r_.cols()) +
                             " but right-hand side has dimension " +
                             std::to_string(x_prime_.dim()));
    }
    if (r_.kind() != x_prime_.kind()) {
        throw ScalarKindError("matrix and right-hand side use different scalar kinds");
    }
}

SystemSpec SystemSpec::to_kind(ScalarKind kind) const {
    return SystemSpec(r_.to_kind(kind), x_prime_.to_kind(kind));
}

Matrix make_matrix(index_t rows, index_t cols, std::vector<Scalar> entries) {
    if (rows < 1 || cols < 1) {
        throw DimensionError("matrix dimensions must be at least 1x1");
    }
    return Matrix(rows, cols, std::move(entries));
}

Matrix leading_submatrix(const Matrix& m, index_t j) {
    if (!m.is_square()) {
        throw DimensionError("leading_submatrix requires a square matrix");
    }
    if (j < 1 || j > m.rows()) {
        throw DimensionError("leading block size " + std::to_string(j) +
                             " out of range for n = " + std::to_string(m.rows()));
    }
    std::vector<Scalar> entries;
    entries.reserve(j * j);
    for (index_t i = 1; i <= j; ++i) {
        for (index_t k = 1; k <= j; ++k) {
            entries.push_back(m.at(i, k));
        }
    }
    return Matrix(j, j, std::move(entries));
}

Matrix replace_column(const Matrix& m, index_t i, const ColumnVector& v) {
    if (!m.is_square()) {
        throw DimensionError("replace_column requires a square matrix");
    }
    if (i < 1 || i > m.cols()) {
        throw DimensionError("column index " + std::to_string(i) +
                             " out of range for n = " + std::to_string(m.cols()));
    }
    if (v.dim() != m.rows()) {
        throw DimensionError("replacement column has dimension " +
                             std::to_string(v.dim()) + ", expected " +
                             std::to_string(m.rows()));
    }
    if (v.kind() != m.kind()) {
        throw ScalarKindError("replacement column kind does not match matrix kind");
    }
    Matrix out = m;
    for (index_t row = 1; row <= m.rows(); ++row) {
        out.set(row, i, v.at(row));
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product shape mismatch");
    }
    if (a.kind() != b.kind()) {
        throw ScalarKindError("matrix product kind mismatch");
    }
    Matrix out(a.rows(), b.cols(), a.kind());
    for (index_t i = 1; i <= a.rows(); ++i) {
        for (index_t j = 1; j <= b.cols(); ++j) {
            Scalar acc = Scalar::zero(a.kind());
            for (index_t k = 1; k <= a.cols(); ++k) {
                acc += a.at(i, k) * b.at(k, j);
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

ColumnVector multiply(const Matrix& a, const ColumnVector& v) {
    if (a.cols() != v.dim()) {
        throw DimensionError("matrix-vector product shape mismatch");
    }
    if (a.kind() != v.kind()) {
        throw ScalarKindError("matrix-vector product kind mismatch");
    }
    ColumnVector out(a.rows(), a.kind());
    for (index_t i = 1; i <= a.rows(); ++i) {
        Scalar acc = Scalar::zero(a.kind());
        for (index_t k = 1; k <= a.cols(); ++k) {
            acc += a.at(i, k) * v.at(k);
        }
        out.set(i, std::move(acc));
    }
    return out;
}

}  // namespace cramer
