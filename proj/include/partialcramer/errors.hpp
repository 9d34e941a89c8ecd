#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cramer {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or index violations (non-square matrix, out-of-range index, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// Exact and floating-point scalars were mixed in one container or expression.
struct ScalarKindError : Error {
    using Error::Error;
};

/// det(R) is zero (exact) or below the configured float threshold.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// A leading principal minor required to be nonzero vanished.
struct ZeroLeadingMinorError : Error {
    std::size_t j;

    ZeroLeadingMinorError(std::size_t j_, const std::string& what)
        : Error(what), j(j_) {}
};

/// Malformed input text. Positions are 1-based.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;

    ParseError(std::size_t line_, std::size_t column_, const std::string& what)
        : Error(what), line(line_), column(column_) {}
};

}  // namespace cramer
