#pragma once

#include "spingw/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spingw {

/// Finite Q-linear combination of opaque symbols. Terms with coefficient zero
/// are never stored, so equality is structural.
///
/// Keys are canonical symbol strings. The distinguished key "1" is the unit;
/// products of symbols are canonical monomials: factor keys sorted and joined
/// with '*' (safe, since '*' never occurs inside a symbol key).
class SymbolicCombo {
public:
    static constexpr const char* unit_key = "1";

    SymbolicCombo() = default;

    static SymbolicCombo constant(const Rational& c) { return symbol(unit_key, c); }

    static SymbolicCombo symbol(const std::string& key, const Rational& c = Rational(1)) {
        SymbolicCombo r;
        if (!c.is_zero())
            r.terms_[key] = c;
        return r;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<std::string, Rational>& terms() const { return terms_; }

    Rational coeff(const std::string& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SymbolicCombo& operator+=(const SymbolicCombo& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    SymbolicCombo& operator-=(const SymbolicCombo& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    SymbolicCombo& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }

    friend SymbolicCombo operator+(SymbolicCombo a, const SymbolicCombo& b) { return a += b; }
    friend SymbolicCombo operator-(SymbolicCombo a, const SymbolicCombo& b) { return a -= b; }
    friend SymbolicCombo operator*(SymbolicCombo a, const Rational& c) { return a *= c; }
    friend SymbolicCombo operator*(const Rational& c, SymbolicCombo a) { return a *= c; }
    SymbolicCombo operator-() const { return *this * Rational(-1); }

    /// Commutative product; monomial keys multiply by multiset merge.
    friend SymbolicCombo operator*(const SymbolicCombo& a, const SymbolicCombo& b) {
        SymbolicCombo r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(monomial_mul(ka, kb), ca * cb);
        return r;
    }

    void add_term(const std::string& key, const Rational& c) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_[key] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    friend bool operator==(const SymbolicCombo&, const SymbolicCombo&) = default;

    static std::vector<std::string> monomial_factors(std::string_view key) {
        std::vector<std::string> out;
        if (key == unit_key)
            return out;
        std::size_t pos = 0;
        while (pos <= key.size()) {
            auto star = key.find('*', pos);
            if (star == std::string_view::npos) {
                out.emplace_back(key.substr(pos));
                break;
            }
            out.emplace_back(key.substr(pos, star - pos));
            pos = star + 1;
        }
        return out;
    }

    static std::string monomial_mul(const std::string& a, const std::string& b) {
        if (a == unit_key)
            return b;
        if (b == unit_key)
            return a;
        auto fa = monomial_factors(a);
        auto fb = monomial_factors(b);
        fa.insert(fa.end(), fb.begin(), fb.end());
        std::sort(fa.begin(), fa.end());
        std::string out;
        for (std::size_t i = 0; i < fa.size(); ++i) {
            if (i)
                out += '*';
            out += fa[i];
        }
        return out;
    }

    /// Deterministic rendering, e.g. "-4 * X + 1/2 * Y"; "0" when empty.
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first) {
                out += (c.sign() < 0 ? "-" : "");
                first = false;
            } else {
                out += (c.sign() < 0 ? " - " : " + ");
            }
            Rational a = c.sign() < 0 ? -c : c;
            if (k == unit_key)
                out += a.str();
            else if (a == Rational(1))
                out += k;
            else
                out += a.str() + " * " + k;
        }
        return out;
    }

private:
    std::map<std::string, Rational> terms_;
};

} // namespace spingw
