#pragma once

#include "spingw/keys.hpp"
#include "spingw/rational.hpp"

#include <stdexcept>
#include <vector>

namespace spingw {

/// Dimension-zero connected-domain invariant:
///   d=1: (-1)^p,   d=2: (1/2)[(-1)^p 2^h - 1].
inline Rational gw_dim0(int d, const SpinKey& s) {
    if (d == 1)
        return parity_sign(s.parity);
    if (d == 2)
        return (parity_sign(s.parity) * pow2(s.genus) - Rational(1)) / Rational(2);
    throw std::domain_error("gw_dim0: only degrees 1 and 2 have closed forms");
}

/// Dimension-zero disconnected-domain invariant:
///   d=1: (-1)^p,   d=2: (-1)^p 2^(h-1).
inline Rational gt_dim0(int d, const SpinKey& s) {
    if (d == 1)
        return parity_sign(s.parity);
    if (d == 2)
        return parity_sign(s.parity) * pow2(s.genus - 1);
    throw std::domain_error("gt_dim0: only degrees 1 and 2 have closed forms");
}

/// Descendant closed forms for degrees 1 and 2; n = 0 is allowed with the
/// empty product equal to 1 (then the d=2 value reduces to gt_dim0).
///   d=1: (-1)^p prod k_i!/(2k_i+1)! (-2)^{-k_i}
///   d=2: (-1)^p 2^{h+n-1} prod k_i!/(2k_i+1)! (-2)^{k_i}
inline Rational descendant_closed_form(int d, const SpinKey& s, const std::vector<int>& ks) {
    for (int k : ks)
        if (k < 0)
            throw std::domain_error("descendant_closed_form: exponents must be >= 0");
    auto weight = [](int k) { return Rational(factorial(k), factorial(2 * k + 1)); };
    if (d == 1) {
        Rational r = parity_sign(s.parity);
        for (int k : ks)
            r *= weight(k) * pow_int(Rational(-1, 2), k);
        return r;
    }
    if (d == 2) {
        const int n = static_cast<int>(ks.size());
        Rational r = parity_sign(s.parity) * pow2(s.genus + n - 1);
        for (int k : ks)
            r *= weight(k) * pow_int(Rational(-2), k);
        return r;
    }
    throw std::domain_error("descendant_closed_form: only degrees 1 and 2 have closed forms");
}

/// Dimension-zero relative invariants of the product ruled surface with
/// transverse contacts: one-sided value 1, two-sided value d!.
inline Rational f0_relative(int d, bool two_sided) {
    if (d < 1)
        throw std::domain_error("f0_relative: degree must be >= 1");
    return two_sided ? Rational(factorial(d)) : Rational(1);
}

struct NormalizedRelative {
    Rational factor; // value(key) = factor * value(reduced)
    InvariantKey reduced;
};

/// Rewrites a dimension-zero relative loc key one normalization step down:
///   GT_{(1^d)}        = d!      * GT_d
///   GT_{m,(1^d)}      = d!      * GT_m
///   GT_{(1^d),(1^d)}  = (d!)^2  * GT_d
/// Keys outside these shapes (or with insertions) are rejected.
inline NormalizedRelative normalize_relative(const InvariantKey& key) {
    if (key.surface() != Surface::loc)
        throw std::domain_error("normalize_relative: only loc keys are covered");
    if (!key.insertions().empty())
        throw std::domain_error("normalize_relative: key must be dimension zero (no insertions)");
    const int d = key.degree();
    const Rational dfact{factorial(d)};
    switch (key.flavor()) {
    case Flavor::relative1: {
        if (!key.contacts()[0].all_ones())
            throw std::domain_error("normalize_relative: key shape not covered");
        return {dfact, InvariantKey::absolute(key.spin(), d)};
    }
    case Flavor::relative2: {
        const Partition& m1 = key.contacts()[0];
        const Partition& m2 = key.contacts()[1];
        if (m1.all_ones() && m2.all_ones())
            return {dfact * dfact, InvariantKey::absolute(key.spin(), d)};
        // Canonical order puts (1^d) first.
        if (m1.all_ones())
            return {dfact, InvariantKey::loc_relative(key.spin(), d, m2)};
        throw std::domain_error("normalize_relative: key shape not covered");
    }
    case Flavor::absolute:
        throw std::domain_error("normalize_relative: key is not relative");
    }
    throw std::logic_error("normalize_relative: unreachable");
}

/// Euler characteristic forced by the dimension constraint
///   sum k_i = d(1-h) - chi/2 + sum_i (l(m^i) - d)
/// (loc keys; for F0 keys h = 0 and only the fundamental-class side
/// contributes a contact correction).
inline int dimension_chi(const InvariantKey& key) {
    int sum_k = 0;
    for (int k : key.insertions())
        sum_k += k;
    if (key.surface() == Surface::loc) {
        int corr = 0;
        for (const Partition& m : key.contacts())
            corr += m.length() - key.degree();
        return 2 * (key.degree() * (1 - key.spin().genus) + corr - sum_k);
    }
    int corr = key.contacts().size() == 2 ? key.contacts()[1].length() - key.degree() : 0;
    return 2 * (key.degree() + corr - sum_k);
}

} // namespace spingw
