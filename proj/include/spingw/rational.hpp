#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace spingw {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// zero is 0/1. Equality is structural.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        value_ = backend(num) / backend(den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : value_ > 0 ? 1 : 0; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p/q", or "p" when q = 1. No whitespace; '-' only on the numerator.
    std::string str() const {
        if (is_integer())
            return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    static Rational parse(std::string_view text) {
        auto bad = [&] {
            throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
        };
        if (text.empty())
            bad();
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        if (!valid_int(num, true))
            bad();
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(num)));
        std::string_view den = text.substr(slash + 1);
        if (!valid_int(den, false))
            bad();
        BigInt d{std::string(den)};
        if (d == 0)
            bad();
        return Rational(BigInt(std::string(num)), d);
    }

private:
    using backend = boost::multiprecision::cpp_rational;

    static bool valid_int(std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    }

    backend value_;
};

inline BigInt factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/// 2^e as an exact rational, e may be negative.
inline Rational pow2(int e) {
    if (e >= 0)
        return Rational(BigInt(1) << e);
    return Rational(BigInt(1), BigInt(1) << -e);
}

inline Rational pow_int(const Rational& base, int e) {
    if (e < 0) {
        if (base.is_zero())
            throw std::domain_error("pow_int: zero to a negative power");
        return Rational(1) / pow_int(base, -e);
    }
    Rational r = 1;
    Rational b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1)
            r *= b;
        b *= b;
    }
    return r;
}

} // namespace spingw
