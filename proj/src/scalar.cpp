#include "partialcramer/scalar.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace cramer {

std::string to_string(ScalarKind kind) {
    return kind == ScalarKind::rational ? "rational" : "float";
}

Scalar Scalar::rational(BigInt numerator, BigInt denominator) {
    if (denominator == 0) {
        throw Error("rational denominator must be nonzero");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    // cpp_rational reduces to lowest terms on construction.
    return Scalar(BigRational(std::move(numerator), std::move(denominator)));
}

Scalar Scalar::rational(long long numerator, long long denominator) {
    return rational(BigInt(numerator), BigInt(denominator));
}

Scalar Scalar::zero(ScalarKind kind) {
    return kind == ScalarKind::rational ? rational(0) : float64(0.0);
}

Scalar Scalar::one(ScalarKind kind) {
    return kind == ScalarKind::rational ? rational(1) : float64(1.0);
}

bool Scalar::is_zero() const {
    if (kind() == ScalarKind::rational) {
        return std::get<BigRational>(value_) == 0;
    }
    return std::get<double>(value_) == 0.0;
}

const BigRational& Scalar::as_rational() const {
    if (kind() != ScalarKind::rational) {
        throw ScalarKindError("as_rational called on a float scalar");
    }
    return std::get<BigRational>(value_);
}

double Scalar::as_float() const {
    if (kind() != ScalarKind::float64) {
        throw ScalarKindError("as_float called on a rational scalar");
    }
    return std::get<double>(value_);
}

Scalar Scalar::to_kind(ScalarKind target) const {
    if (target == kind()) {
        return *this;
    }
    if (target == ScalarKind::float64) {
        return float64(as_rational().convert_to<double>());
    }
    double v = as_float();
    if (!std::isfinite(v)) {
        throw Error("cannot convert non-finite float to rational");
    }
    return rational(BigRational(v));
}

namespace {

void require_same_kind(const Scalar& a, const Scalar& b, const char* op) {
    if (a.kind() != b.kind()) {
        throw ScalarKindError(std::string("mixed scalar kinds in ") + op);
    }
}

}  // namespace

Scalar Scalar::operator-() const {
    if (kind() == ScalarKind::rational) {
        return Scalar(-std::get<BigRational>(value_));
    }
    return Scalar(-std::get<double>(value_));
}

Scalar Scalar::operator+(const Scalar& other) const {
    require_same_kind(*this, other, "+");
    if (kind() == ScalarKind::rational) {
        return Scalar(std::get<BigRational>(value_) + std::get<BigRational>(other.value_));
    }
    return Scalar(std::get<double>(value_) + std::get<double>(other.value_));
}

Scalar Scalar::operator-(const Scalar& other) const {
    require_same_kind(*this, other, "-");
    if (kind() == ScalarKind::rational) {
        return Scalar(std::get<BigRational>(value_) - std::get<BigRational>(other.value_));
    }
    return Scalar(std::get<double>(value_) - std::get<double>(other.value_));
}

Scalar Scalar::operator*(const Scalar& other) const {
    require_same_kind(*this, other, "*");
    if (kind() == ScalarKind::rational) {
        return Scalar(std::get<BigRational>(value_) * std::get<BigRational>(other.value_));
    }
    return Scalar(std::get<double>(value_) * std::get<double>(other.value_));
}

Scalar Scalar::operator/(const Scalar& other) const {
    require_same_kind(*this, other, "/");
    if (kind() == ScalarKind::rational) {
        if (other.is_zero()) {
            throw Error("division by zero");
        }
        return Scalar(std::get<BigRational>(value_) / std::get<BigRational>(other.value_));
    }
    return Scalar(std::get<double>(value_) / std::get<double>(other.value_));
}

bool Scalar::operator==(const Scalar& other) const {
    require_same_kind(*this, other, "==");
    if (kind() == ScalarKind::rational) {
        return std::get<BigRational>(value_) == std::get<BigRational>(other.value_);
    }
    return std::get<double>(value_) == std::get<double>(other.value_);
}

Scalar Scalar::abs() const {
    if (kind() == ScalarKind::rational) {
        return Scalar(BigRational(boost::multiprecision::abs(std::get<BigRational>(value_))));
    }
    return Scalar(std::fabs(std::get<double>(value_)));
}

std::string Scalar::to_string() const {
    if (kind() == ScalarKind::rational) {
        const BigRational& r = std::get<BigRational>(value_);
        std::ostringstream os;
        if (denominator(r) == 1) {
            os << numerator(r);
        } else {
            os << numerator(r) << "/" << denominator(r);
        }
        return os.str();
    }
    double v = std::get<double>(value_);
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool approx_equal(double a, double b, double tol) {
    double diff = std::fabs(a - b);
    return diff <= tol || diff <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace cramer
