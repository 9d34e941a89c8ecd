#pragma once

#include <cstddef>
#include <vector>

#include "partialcramer/scalar.hpp"

namespace cramer {

using index_t = std::size_t;

/// Dense row-major matrix over a single scalar kind. All indices in the
/// public interface are 1-based, matching the conventions used everywhere
/// else in this library (error messages, file formats, printed output).
///
/// Matrices are immutable after construction; every operation returns a new
/// value. A zero-column matrix is permitted so that coefficient blocks of
/// width n-j can represent the j = n case; make_matrix, the user-facing
/// constructor, still rejects it.
class Matrix {
  public:
    Matrix(index_t rows, index_t cols, std::vector<Scalar> entries);

    /// Zero-filled matrix of an explicit kind; allows cols == 0.
    Matrix(index_t rows, index_t cols, ScalarKind kind);

    static Matrix identity(index_t n, ScalarKind kind);

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    ScalarKind kind() const { return kind_; }
    bool is_square() const { return rows_ == cols_; }

    /// 1-based element access.
    const Scalar& at(index_t i, index_t j) const;
    void set(index_t i, index_t j, Scalar value);

    std::vector<Scalar> column(index_t j) const;
    const std::vector<Scalar>& entries() const { return entries_; }

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix to_kind(ScalarKind kind) const;

  private:
    index_t rows_;
    index_t cols_;
    ScalarKind kind_;
    std::vector<Scalar> entries_;
};

class ColumnVector {
  public:
    explicit ColumnVector(std::vector<Scalar> entries);
    ColumnVector(index_t dim, ScalarKind kind);

    index_t dim() const { return static_cast<index_t>(entries_.size()); }
    ScalarKind kind() const { return kind_; }

    const Scalar& at(index_t i) const;
    void set(index_t i, Scalar value);
    const std::vector<Scalar>& entries() const { return entries_; }

    bool operator==(const ColumnVector& other) const;
    bool operator!=(const ColumnVector& other) const { return !(*this == other); }

    ColumnVector to_kind(ScalarKind kind) const;

  private:
    ScalarKind kind_;
    std::vector<Scalar> entries_;
};

/// The linear system x' = R x: an n-by-n matrix together with the n
/// transformed values. Both parts must share one scalar kind.
class SystemSpec {
  public:
    SystemSpec(Matrix r, ColumnVector x_prime);

    const Matrix& r() const { return r_; }
    const ColumnVector& x_prime() const { return x_prime_; }
    index_t n() const { return r_.rows(); }
    ScalarKind kind() const { return r_.kind(); }

    SystemSpec to_kind(ScalarKind kind) const;

  private:
    Matrix r_;
    ColumnVector x_prime_;
};

/// Validating constructor: rows, cols >= 1, entries in row-major order,
/// uniform scalar kind.
Matrix make_matrix(index_t rows, index_t cols, std::vector<Scalar> entries);

/// Top-left j-by-j block of a square matrix, 1 <= j <= n.
Matrix leading_submatrix(const Matrix& m, index_t j);

/// Copy of square m with column i replaced by v.
Matrix replace_column(const Matrix& m, index_t i, const ColumnVector& v);

Matrix multiply(const Matrix& a, const Matrix& b);
ColumnVector multiply(const Matrix& a, const ColumnVector& v);

}  // namespace cramer
