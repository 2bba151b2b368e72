#include "hexpack/exact.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace hexpack;

namespace {

std::mt19937 rng(20240817);

Rational random_rational(long num_range = 999, long den_range = 99) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return Rational(num(rng), den(rng));
}

Root3Scalar random_value() { return Root3Scalar(random_rational(), random_rational()); }

// Parses a decimal_string rendering back into an exact rational.
Rational parse_decimal(const std::string& s) {
    const bool negative = !s.empty() && s[0] == '-';
    const std::string t = negative ? s.substr(1) : s;
    const auto dot = t.find('.');
    REQUIRE(dot != std::string::npos);
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    const int frac = static_cast<int>(t.size() - dot - 1);
    Rational v = make_rational(BigInt(digits),
                               boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac)));
    return negative ? Rational(-v) : v;
}

// arctan(1/x) * one, by the alternating series with floor divisions.
BigInt arctan_inv_scaled(long x, const BigInt& one) {
    BigInt sum = 0;
    BigInt power = one / x;
    const long x2 = x * x;
    long k = 0;
    while (!power.is_zero()) {
        const BigInt term = power / (2 * k + 1);
        sum += (k % 2 == 0) ? term : BigInt(-term);
        power /= x2;
        ++k;
    }
    return sum;
}

}  // namespace

TEST_CASE("conjugate products and inverses") {
    const Root3Scalar s3 = Root3Scalar::sqrt3();
    CHECK((Root3Scalar(1) + s3) * (Root3Scalar(1) - s3) == Root3Scalar(-2));
    CHECK((Root3Scalar(2) - s3) * (Root3Scalar(2) + s3) == Root3Scalar(1));
    CHECK(Root3Scalar(1) / (Root3Scalar(2) - s3) == Root3Scalar(2) + s3);
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Root3Scalar(1) / Root3Scalar(), std::domain_error);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("exact sign") {
    CHECK(Root3Scalar(Rational(-5), Rational(3)).sign() == 1);   // 27 > 25
    CHECK(Root3Scalar(Rational(7), Rational(-4)).sign() == 1);   // 49 > 48
    CHECK(Root3Scalar(Rational(5), Rational(-3)).sign() == -1);
    CHECK(Root3Scalar(Rational(-7), Rational(4)).sign() == -1);
    CHECK(Root3Scalar().sign() == 0);
    CHECK(Root3Scalar(Rational(0), Rational(-2)).sign() == -1);
}

TEST_CASE("sign agrees with a 50-digit decimal evaluation") {
    for (int n = 0; n < 10000; ++n) {
        const Root3Scalar x = random_value();
        const std::string s = decimal_string(PiScaled(x), 50);
        int rendered_sign = 0;
        if (s.find_first_of("123456789") != std::string::npos)
            rendered_sign = s[0] == '-' ? -1 : 1;
        CHECK(x.sign() == rendered_sign);
    }
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(PiScaled(Root3Scalar::sqrt3(Rational(1, 6)), 1), 4) == "0.9069");
    CHECK(decimal_string(Root3Scalar(Rational(3, 8)), 3) == "0.375");
    CHECK(decimal_string(Root3Scalar::sqrt3(), 6) == "1.732051");
    CHECK(decimal_string(PiScaled(Root3Scalar(1), 1), 12) == "3.141592653590");
    CHECK(decimal_string(Root3Scalar::sqrt3(), 50) ==
          "1.73205080756887729352744634150587236694280525381038");

    SUBCASE("half-up ties on exact rationals") {
        CHECK(decimal_string(Root3Scalar(Rational(3, 8)), 2) == "0.38");
        CHECK(decimal_string(Root3Scalar(Rational(-3, 8)), 2) == "-0.38");
        CHECK(decimal_string(Root3Scalar(Rational(1, 2)), 1) == "0.5");
        CHECK(decimal_string(Root3Scalar(Rational(5, 100)), 1) == "0.1");
    }
    SUBCASE("values rounding to zero lose the sign") {
        CHECK(decimal_string(Root3Scalar(Rational(-1, 800)), 2) == "0.00");
    }
    SUBCASE("digit range") {
        CHECK_THROWS_AS(decimal_string(Root3Scalar(1), 0), std::out_of_range);
        CHECK_THROWS_AS(decimal_string(Root3Scalar(1), 101), std::out_of_range);
    }
}

TEST_CASE("rationals stay normalized through arithmetic") {
    for (int n = 0; n < 500; ++n) {
        const Rational q = random_rational() * random_rational() - random_rational();
        CHECK(denominator_of(q) > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(numerator_of(q)),
                                         denominator_of(q)) == 1);
    }
    CHECK(make_rational(4, -6) == Rational(-2, 3));
    CHECK(denominator_of(make_rational(-4, -6)) == 3);
}

TEST_CASE("field axioms on random values") {
    for (int n = 0; n < 500; ++n) {
        const Root3Scalar x = random_value();
        const Root3Scalar y = random_value();
        const Root3Scalar z = random_value();
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Root3Scalar());
        if (!y.is_zero()) {
            CHECK(y * (Root3Scalar(1) / y) == Root3Scalar(1));
            CHECK((x / y) * y == x);
        }
    }
}

TEST_CASE("rendering is monotone") {
    for (int n = 0; n < 2000; ++n) {
        const Root3Scalar x = random_value();
        const Root3Scalar y = random_value();
        const Rational px = parse_decimal(decimal_string(PiScaled(x), 6));
        const Rational py = parse_decimal(decimal_string(PiScaled(y), 6));
        if (x < y)
            CHECK(px <= py);
        else if (y < x)
            CHECK(py <= px);
        else
            CHECK(px == py);
    }
}

TEST_CASE("pi-scaled comparisons require matching exponents") {
    const PiScaled half_pi(Root3Scalar(Rational(1, 2)), 1);
    const PiScaled half(Root3Scalar(Rational(1, 2)), 0);
    CHECK_THROWS_AS((void)half_pi.compare(half), std::invalid_argument);
    CHECK_THROWS_AS(half_pi + half, std::invalid_argument);
    CHECK(PiScaled(Root3Scalar(), 1) == PiScaled(Root3Scalar(), 0));
    CHECK(half_pi + PiScaled(Root3Scalar(), 0) == half_pi);
    CHECK(half_pi > PiScaled(Root3Scalar(), 0));
}

TEST_CASE("embedded pi matches an independent arctan series") {
    const int digits = 80;
    const BigInt one = boost::multiprecision::pow(BigInt(10), digits + 10);
    const BigInt machin = 16 * arctan_inv_scaled(5, one) - 4 * arctan_inv_scaled(239, one);
    const BigInt scaled = machin / boost::multiprecision::pow(BigInt(10), 10);

    std::string ref = pi_reference_digits();  // "3.<150 digits>"
    ref.erase(1, 1);
    const BigInt reference(ref.substr(0, digits + 1));
    CHECK(boost::multiprecision::abs(BigInt(reference - scaled)) <= 100);  // >= 78 digits agree
}
