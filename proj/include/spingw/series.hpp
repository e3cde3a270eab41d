#pragma once

#include "spingw/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace spingw {

/// Truncated generating series sum_{d=1..T} c_d t^d with exact coefficients.
/// There is no constant term; absent degrees are zero and zeros are not stored,
/// so equality is structural.
class DegreeSeries {
public:
    explicit DegreeSeries(int truncation) : truncation_(truncation) {
        if (truncation < 1)
            throw std::invalid_argument("DegreeSeries: truncation order must be >= 1");
    }

    int truncation() const { return truncation_; }

    Rational coeff(int d) const {
        auto it = coeff_.find(d);
        return it == coeff_.end() ? Rational(0) : it->second;
    }

    void set(int d, const Rational& v) {
        if (d < 1 || d > truncation_)
            throw std::out_of_range("DegreeSeries: degree outside 1..T");
        if (v.is_zero())
            coeff_.erase(d);
        else
            coeff_[d] = v;
    }

    const std::map<int, Rational>& terms() const { return coeff_; }

    friend bool operator==(const DegreeSeries&, const DegreeSeries&) = default;

    DegreeSeries& operator+=(const DegreeSeries& o) {
        if (o.truncation_ != truncation_)
            throw std::invalid_argument("DegreeSeries: mismatched truncation orders");
        for (const auto& [d, c] : o.coeff_)
            set(d, coeff(d) + c);
        return *this;
    }
    friend DegreeSeries operator+(DegreeSeries a, const DegreeSeries& b) { return a += b; }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [d, c] : coeff_) {
            if (!first)
                out += ", ";
            first = false;
            out += std::to_string(d) + ": " + c.str();
        }
        return out + "}";
    }

private:
    int truncation_;
    std::map<int, Rational> coeff_;
};

/// Degree-1..T coefficients of exp(s) - 1, computed from the convolution
/// recurrence n e_n = sum_{k=1..n} k s_k e_{n-k} with e_0 = 1.
inline DegreeSeries series_exp(const DegreeSeries& s) {
    const int t = s.truncation();
    DegreeSeries out(t);
    std::map<int, Rational> e;
    e[0] = Rational(1);
    for (int n = 1; n <= t; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += Rational(k) * s.coeff(k) * e[n - k];
        e[n] = acc / Rational(n);
        out.set(n, e[n]);
    }
    return out;
}

/// Degree-1..T coefficients of log(1 + s); inverse of series_exp at every
/// truncation order.
inline DegreeSeries series_log(const DegreeSeries& s) {
    const int t = s.truncation();
    DegreeSeries out(t);
    std::map<int, Rational> l;
    for (int n = 1; n <= t; ++n) {
        Rational acc = s.coeff(n);
        for (int k = 1; k < n; ++k)
            acc -= Rational(k) * l[k] * s.coeff(n - k) / Rational(n);
        l[n] = acc;
        out.set(n, acc);
    }
    return out;
}

/// (1 + a)(1 + b) - 1, truncated; the multiplicative counterpart of series
/// addition under exp.
inline DegreeSeries series_mul_one_plus(const DegreeSeries& a, const DegreeSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("series_mul_one_plus: mismatched truncation orders");
    const int t = a.truncation();
    DegreeSeries out(t);
    for (int n = 1; n <= t; ++n) {
        Rational acc = a.coeff(n) + b.coeff(n);
        for (int k = 1; k < n; ++k)
            acc += a.coeff(k) * b.coeff(n - k);
        out.set(n, acc);
    }
    return out;
}

} // namespace spingw
