#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace hexpack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Builds num/den with the sign normalized into the numerator.
/// (The cpp_rational two-argument constructor rejects negative denominators.)
inline Rational make_rational(BigInt num, BigInt den) {
    if (den.is_zero()) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& q);

/// Element of the field Q[sqrt(3)]: rational_part + sqrt3_coeff * sqrt(3).
///
/// Every length and area in this library is a Root3Scalar (in units of the
/// packed-circle radius r, or r^2 for areas). Values are immutable and all
/// operations are exact; equality is component-wise, which coincides with
/// value equality because sqrt(3) is irrational.
class Root3Scalar {
public:
    Root3Scalar() = default;
    Root3Scalar(long long value) : a_(value) {}  // NOLINT: integers embed naturally
    Root3Scalar(Rational rational_part) : a_(std::move(rational_part)) {}
    Root3Scalar(Rational rational_part, Rational sqrt3_coeff)
        : a_(std::move(rational_part)), b_(std::move(sqrt3_coeff)) {}

    static Root3Scalar sqrt3(Rational coeff = Rational(1)) {
        return Root3Scalar(Rational(0), std::move(coeff));
    }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_coeff() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact sign without floating point. When the two components pull in
    /// opposite directions, |a| vs |b|*sqrt(3) is decided by comparing
    /// a^2 against 3 b^2.
    int sign() const {
        const int sa = a_.sign();
        const int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational lhs = a_ * a_;
        const Rational rhs = 3 * (b_ * b_);
        if (lhs == rhs) return 0;  // only possible when a = b = 0
        return lhs > rhs ? sa : sb;
    }

    Root3Scalar conjugate() const { return {a_, -b_}; }

    /// Field norm a^2 - 3 b^2; zero iff the value is zero.
    Rational norm() const { return a_ * a_ - 3 * (b_ * b_); }

    Root3Scalar abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        constexpr double kSqrt3 = 1.7320508075688772;
        return a_.convert_to<double>() + b_.convert_to<double>() * kSqrt3;
    }

    std::string to_string() const;

    Root3Scalar operator-() const { return {-a_, -b_}; }

    friend Root3Scalar operator+(const Root3Scalar& x, const Root3Scalar& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend Root3Scalar operator-(const Root3Scalar& x, const Root3Scalar& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend Root3Scalar operator*(const Root3Scalar& x, const Root3Scalar& y) {
        return {x.a_ * y.a_ + 3 * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend Root3Scalar operator/(const Root3Scalar& x, const Root3Scalar& y) {
        const Rational n = y.norm();
        if (n.is_zero()) throw std::domain_error("Root3Scalar: division by zero");
        return {(x.a_ * y.a_ - 3 * (x.b_ * y.b_)) / n, (x.b_ * y.a_ - x.a_ * y.b_) / n};
    }

    Root3Scalar& operator+=(const Root3Scalar& y) { return *this = *this + y; }
    Root3Scalar& operator-=(const Root3Scalar& y) { return *this = *this - y; }
    Root3Scalar& operator*=(const Root3Scalar& y) { return *this = *this * y; }
    Root3Scalar& operator/=(const Root3Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Root3Scalar& x, const Root3Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Root3Scalar& x, const Root3Scalar& y) { return !(x == y); }
    friend bool operator<(const Root3Scalar& x, const Root3Scalar& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const Root3Scalar& x, const Root3Scalar& y) { return y < x; }
    friend bool operator<=(const Root3Scalar& x, const Root3Scalar& y) { return !(y < x); }
    friend bool operator>=(const Root3Scalar& x, const Root3Scalar& y) { return !(x < y); }

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Root3Scalar& x);

/// coeff * pi^pi_exponent with pi_exponent in {0, 1}.
///
/// Densities of circle-bounded configurations carry pi^0 (the pi factors
/// cancel); polygon-bounded densities carry pi^1. Exact addition and
/// comparison are only defined between values of the same exponent; a zero
/// coefficient is compatible with either.
class PiScaled {
public:
    PiScaled() = default;
    explicit PiScaled(Root3Scalar coeff, int pi_exponent = 0)
        : coeff_(std::move(coeff)), pi_exponent_(pi_exponent) {
        if (pi_exponent != 0 && pi_exponent != 1)
            throw std::invalid_argument("PiScaled: pi exponent must be 0 or 1");
    }

    const Root3Scalar& coeff() const { return coeff_; }
    int pi_exponent() const { return pi_exponent_; }

    bool is_zero() const { return coeff_.is_zero(); }
    int sign() const { return coeff_.sign(); }  // pi > 0

    PiScaled operator-() const { return PiScaled(-coeff_, pi_exponent_); }
    PiScaled abs() const { return sign() < 0 ? -*this : *this; }

    friend PiScaled operator+(const PiScaled& x, const PiScaled& y) {
        const int e = joint_exponent(x, y);
        return PiScaled(x.coeff_ + y.coeff_, e);
    }
    friend PiScaled operator-(const PiScaled& x, const PiScaled& y) {
        const int e = joint_exponent(x, y);
        return PiScaled(x.coeff_ - y.coeff_, e);
    }
    friend PiScaled operator*(const PiScaled& x, const Root3Scalar& s) {
        return PiScaled(x.coeff_ * s, x.pi_exponent_);
    }
    friend PiScaled operator/(const PiScaled& x, const Root3Scalar& s) {
        return PiScaled(x.coeff_ / s, x.pi_exponent_);
    }

    /// Exact ratio of two values with the same exponent (the pi factors cancel).
    friend Root3Scalar ratio(const PiScaled& x, const PiScaled& y) {
        joint_exponent(x, y);
        return x.coeff_ / y.coeff_;
    }

    friend bool operator==(const PiScaled& x, const PiScaled& y) {
        if (x.coeff_.is_zero() && y.coeff_.is_zero()) return true;
        return x.pi_exponent_ == y.pi_exponent_ && x.coeff_ == y.coeff_;
    }
    friend bool operator!=(const PiScaled& x, const PiScaled& y) { return !(x == y); }

    /// -1/0/+1 ordering; throws for incompatible exponents.
    int compare(const PiScaled& y) const {
        if (coeff_.is_zero()) return -y.sign();
        if (y.coeff_.is_zero()) return sign();
        if (pi_exponent_ != y.pi_exponent_)
            throw std::invalid_argument("PiScaled: cannot compare values with mixed pi exponents");
        return (coeff_ - y.coeff_).sign();
    }
    friend bool operator<(const PiScaled& x, const PiScaled& y) { return x.compare(y) < 0; }
    friend bool operator>(const PiScaled& x, const PiScaled& y) { return x.compare(y) > 0; }
    friend bool operator<=(const PiScaled& x, const PiScaled& y) { return x.compare(y) <= 0; }
    friend bool operator>=(const PiScaled& x, const PiScaled& y) { return x.compare(y) >= 0; }

    double to_double() const {
        constexpr double kPi = 3.141592653589793;
        return pi_exponent_ == 1 ? coeff_.to_double() * kPi : coeff_.to_double();
    }

    std::string to_string() const;

private:
    static int joint_exponent(const PiScaled& x, const PiScaled& y) {
        if (x.coeff_.is_zero()) return y.pi_exponent_;
        if (y.coeff_.is_zero()) return x.pi_exponent_;
        if (x.pi_exponent_ != y.pi_exponent_)
            throw std::invalid_argument("PiScaled: cannot combine values with mixed pi exponents");
        return x.pi_exponent_;
    }

    Root3Scalar coeff_;
    int pi_exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PiScaled& x);

/// Decimal expansion of `value` rounded half-up (ties away from zero) to
/// `digits` fractional digits, 1 <= digits <= 100. Exact rational inputs are
/// rounded exactly; irrational inputs are evaluated with 12 guard digits,
/// sqrt(3) via an integer square root and pi from an embedded constant.
std::string decimal_string(const PiScaled& value, int digits);
std::string decimal_string(const Root3Scalar& value, int digits);

/// The embedded pi constant as "3." followed by 150 fractional digits.
const std::string& pi_reference_digits();

}  // namespace hexpack
