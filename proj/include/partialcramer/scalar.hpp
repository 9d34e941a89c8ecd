#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>

#include "partialcramer/errors.hpp"

namespace cramer {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class ScalarKind { rational, float64 };

std::string to_string(ScalarKind kind);

/// A single number drawn from one of two arithmetics: exact rationals
/// (arbitrary-precision, always in lowest terms with positive denominator)
/// or IEEE-754 doubles. The two kinds never mix: any binary operation on
/// scalars of different kinds throws ScalarKindError instead of promoting,
/// so an exact computation can never silently degrade to floating point.
class Scalar {
  public:
    /// Rational zero.
    Scalar() : value_(BigRational(0)) {}

    static Scalar rational(BigRational value) { return Scalar(std::move(value)); }
    static Scalar rational(BigInt numerator, BigInt denominator);
    static Scalar rational(long long numerator, long long denominator = 1);
    static Scalar float64(double value) { return Scalar(value); }

    /// Zero of the requested kind.
    static Scalar zero(ScalarKind kind);
    static Scalar one(ScalarKind kind);

    ScalarKind kind() const {
        return std::holds_alternative<BigRational>(value_) ? ScalarKind::rational
                                                           : ScalarKind::float64;
    }

    bool is_zero() const;

    const BigRational& as_rational() const;
    double as_float() const;

    /// Exact conversions between the kinds. A double converts to the dyadic
    /// rational it represents exactly; a rational rounds to nearest double.
    Scalar to_kind(ScalarKind kind) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;

    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
    Scalar& operator/=(const Scalar& other) { return *this = *this / other; }

    /// Exact equality. Comparing different kinds throws ScalarKindError.
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    Scalar abs() const;

    /// "p/q" (or "p" when integral) for rationals, shortest round-trip
    /// decimal for doubles.
    std::string to_string() const;

  private:
    explicit Scalar(BigRational value) : value_(std::move(value)) {}
    explicit Scalar(double value) : value_(value) {}

    std::variant<BigRational, double> value_;
};

/// |a - b| <= tol or |a - b| <= tol * max(|a|, |b|). Used wherever the float
/// kind needs an equality check; rationals compare exactly before reaching
/// this.
bool approx_equal(double a, double b, double tol = 1e-9);

}  // namespace cramer
