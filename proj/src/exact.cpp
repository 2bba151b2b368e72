#include "hexpack/exact.hpp"

#include <ostream>
#include <sstream>

namespace hexpack {
namespace {

constexpr int kMaxDigits = 100;
constexpr int kGuardDigits = 12;

// 150 fractional digits of pi.
constexpr const char kPiFractionalDigits[] =
    "141592653589793238462643383279502884197169399375"
    "105820974944592307816406286208998628034825342117"
    "067982148086513282306647093844609550582231725359";

BigInt pow10(int n) {
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(n));
}

// Nearest-integer division for d > 0, ties away from zero.
BigInt round_div(const BigInt& n, const BigInt& d) {
    BigInt q = (2 * boost::multiprecision::abs(n) + d) / (2 * d);
    return n < 0 ? BigInt(-q) : q;
}

// round(pi * 10^k); requires k < 150.
BigInt pi_scaled(int k) {
    std::string s = "3";
    s.append(kPiFractionalDigits, kPiFractionalDigits + k);
    BigInt v(s);
    if (kPiFractionalDigits[k] >= '5') ++v;
    return v;
}

// floor(sqrt(3) * 10^k)
BigInt sqrt3_scaled(int k) {
    const BigInt scale = pow10(k);
    return boost::multiprecision::sqrt(BigInt(3 * scale * scale));
}

std::string sqrt3_term_string(const Rational& coeff_magnitude) {
    const BigInt num = numerator_of(coeff_magnitude);
    const BigInt den = denominator_of(coeff_magnitude);
    std::string s;
    if (num != 1) s = num.str() + "*";
    s += "sqrt(3)";
    if (den != 1) s += "/" + den.str();
    return s;
}

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

std::string Root3Scalar::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (!a_.is_zero()) s = a_.str();
    if (!b_.is_zero()) {
        const std::string term = sqrt3_term_string(boost::multiprecision::abs(b_));
        if (s.empty())
            s = (b_.sign() < 0 ? "-" : "") + term;
        else
            s += (b_.sign() < 0 ? " - " : " + ") + term;
    }
    return s;
}

std::string PiScaled::to_string() const {
    if (coeff_.is_zero()) return "0";
    if (pi_exponent_ == 0) return coeff_.to_string();
    const int sgn = coeff_.sign();
    const Root3Scalar mag = sgn < 0 ? -coeff_ : coeff_;
    std::string s;
    if (mag == Root3Scalar(1)) {
        s = "pi";
    } else if (mag.is_rational()) {
        const BigInt num = numerator_of(mag.rational_part());
        const BigInt den = denominator_of(mag.rational_part());
        s = (num == 1 ? "pi" : num.str() + "*pi");
        if (den != 1) s += "/" + den.str();
    } else if (mag.rational_part().is_zero()) {
        const BigInt num = numerator_of(mag.sqrt3_coeff());
        const BigInt den = denominator_of(mag.sqrt3_coeff());
        s = (num == 1 ? "pi*sqrt(3)" : num.str() + "*pi*sqrt(3)");
        if (den != 1) s += "/" + den.str();
    } else {
        s = "pi*(" + mag.to_string() + ")";
    }
    return sgn < 0 ? "-" + s : s;
}

std::ostream& operator<<(std::ostream& os, const Root3Scalar& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const PiScaled& x) { return os << x.to_string(); }

std::string decimal_string(const PiScaled& value, int digits) {
    if (digits < 1 || digits > kMaxDigits)
        throw std::out_of_range("decimal_string: digits must be in [1, 100]");

    int sgn = value.sign();
    const Root3Scalar mag = sgn < 0 ? -value.coeff() : value.coeff();

    BigInt units;  // round_half_up(|value| * 10^digits)
    if (value.pi_exponent() == 0 && mag.is_rational()) {
        const BigInt num = numerator_of(mag.rational_part());
        const BigInt den = denominator_of(mag.rational_part());
        units = (2 * num * pow10(digits) + den) / (2 * den);
    } else {
        const int k = digits + kGuardDigits;
        const BigInt scale = pow10(k);
        const Rational& a = mag.rational_part();
        const Rational& b = mag.sqrt3_coeff();
        BigInt approx = round_div(numerator_of(a) * scale, denominator_of(a)) +
                        round_div(numerator_of(b) * sqrt3_scaled(k), denominator_of(b));
        if (value.pi_exponent() == 1) approx = round_div(approx * pi_scaled(k), scale);
        if (approx < 0) approx = 0;
        const BigInt drop = pow10(kGuardDigits);
        units = (2 * approx + drop) / (2 * drop);
    }

    if (units.is_zero()) sgn = 0;
    const BigInt base = pow10(digits);
    std::string frac = BigInt(units % base).str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = sgn < 0 ? "-" : "";
    out += BigInt(units / base).str();
    out += '.';
    out += frac;
    return out;
}

std::string decimal_string(const Root3Scalar& value, int digits) {
    return decimal_string(PiScaled(value), digits);
}

const std::string& pi_reference_digits() {
    static const std::string digits = std::string("3.") + kPiFractionalDigits;
    return digits;
}

}  // namespace hexpack
