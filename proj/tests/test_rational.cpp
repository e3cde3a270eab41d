#include "spingw/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace spingw;

namespace {

bool canonical(const Rational& r) {
    return r.denominator() > 0 &&
           boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                      r.denominator()) == 1;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("canonical form is closed under field operations") {
    std::mt19937 rng(20240711);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a * b));
        if (!b.is_zero()) {
            CHECK(canonical(a / b));
            CHECK((a / b) * b == a);
        }
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational(-5, 2).str() == "-5/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("-5/2") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("4/6") == Rational(2, 3));

    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational(rng);
        CHECK(Rational::parse(a.str()) == a);
    }

    for (const char* bad : {"", "1/0", "1.5", " 1", "+1", "1/ 2", "1/-2", "a", "1//2", "-"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("powers and combinatorial helpers") {
    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(-1) == Rational(1, 2));
    CHECK(pow2(10) == Rational(1024));
    CHECK(pow_int(Rational(-2), 3) == Rational(-8));
    CHECK(pow_int(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(pow_int(Rational(2), -2) == Rational(1, 4));
    CHECK_THROWS_AS(pow_int(Rational(0), -1), std::domain_error);

    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    // brute-force cross-check of binomial against factorials
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == factorial(n) / (factorial(k) * factorial(n - k)));
}

TEST_CASE("large exponents stay exact") {
    CHECK(pow2(63) == Rational(BigInt(1) << 63));
    CHECK(pow2(200) * pow2(-200) == Rational(1));
    CHECK(Rational(BigInt(1) << 64).str() == "18446744073709551616");
}
