#pragma once

#include "spingw/closed_forms.hpp"
#include "spingw/combo.hpp"
#include "spingw/keys.hpp"
#include "spingw/registry.hpp"
#include "spingw/trace.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spingw {

struct HypothesisViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Symbol key for the opaque degree-2, contact-(2) invariant GT_(2)^{loc,h,p}.
inline std::string contact_two_symbol(const SpinKey& s) {
    return InvariantKey::loc_relative(s, 2, Partition({2})).canonical();
}

/// Degree-2 splitting of a genus h = h1 + h2 spin curve:
///   GT_(2)^{h,p} = (-1)^{p1} 2^{h1} GT_(2)^{h2,p2}
///                + (-1)^{p2} 2^{h2} GT_(2)^{h1,p1}
///                - (-1)^p    2^h    GT_(2)^{0,+}.
/// Returned as a combination over the opaque GT_(2) symbols; symmetric in
/// (k1, k2).
inline SymbolicCombo genus_split(const SpinKey& k1, const SpinKey& k2) {
    SpinKey total(k1.genus + k2.genus, parity_add(k1.parity, k2.parity));
    SymbolicCombo r;
    r += SymbolicCombo::symbol(contact_two_symbol(k2), parity_sign(k1.parity) * pow2(k1.genus));
    r += SymbolicCombo::symbol(contact_two_symbol(k1), parity_sign(k2.parity) * pow2(k2.genus));
    r -= SymbolicCombo::symbol(contact_two_symbol(SpinKey(0, Parity::even)),
                               parity_sign(total.parity) * pow2(total.genus));
    return r;
}

/// Degree-2 genus descent:
///   GT_(2)^{h,p} = 4 GT_(2)^{h-1,p} - (-1)^p 2^h GT_(2)^{0,+},
/// valid for h >= 2 or (h,p) = (1,+) only. The (1,-) value is reachable
/// through the splitting relation, not through descent.
inline SymbolicCombo genus_descent(const SpinKey& s) {
    if (!(s.genus >= 2 || (s.genus == 1 && s.parity == Parity::even)))
        throw HypothesisViolation("genus_descent: requires h >= 2 or (h,p) = (1,+)");
    SymbolicCombo r;
    r += SymbolicCombo::symbol(contact_two_symbol(SpinKey(s.genus - 1, s.parity)), Rational(4));
    r -= SymbolicCombo::symbol(contact_two_symbol(SpinKey(0, Parity::even)),
                               parity_sign(s.parity) * pow2(s.genus));
    return r;
}

/// GT_(2)^{1,-} = -GT_(2)^{1,+}, derived by expanding GT_(2)^{2,+} with the
/// splitting at equal parities twice and equating.
inline Rational genus_one_parity_ratio() {
    SpinKey even1(1, Parity::even), odd1(1, Parity::odd);
    SymbolicCombo diff = genus_split(even1, even1) - genus_split(odd1, odd1);
    const std::string plus = contact_two_symbol(even1);
    const std::string minus = contact_two_symbol(odd1);
    Rational c_plus = diff.coeff(plus);
    Rational c_minus = diff.coeff(minus);
    if (c_minus.is_zero() || diff.size() != 2)
        throw std::logic_error("genus_one_parity_ratio: unexpected splitting difference");
    return -(c_plus / c_minus); // diff = 0 forces GT^{1,-} = ratio * GT^{1,+}
}

struct GenusReduction {
    Rational coeff; // GT_(2)^{h,p} = coeff * GT_(2)^{0,+}
    ReductionTrace trace;
};

/// Replays the genus-reduction induction: peel one genus at a time with the
/// degree-2 splitting against a (1,+) piece, resolve the odd genus-one symbol
/// by the parity relation, then descend (1,+) to genus zero. The closed form
/// (-1)^p 2^h is derived by the engine, never assumed.
inline GenusReduction reduce_genus_zero(const SpinKey& s) {
    ReductionTrace trace;
    SymbolicCombo cur = SymbolicCombo::symbol(contact_two_symbol(s));
    const std::string base = contact_two_symbol(SpinKey(0, Parity::even));
    if (s.genus == 0) {
        trace.append("base-genus-zero", cur, cur);
        return {Rational(1), trace};
    }

    auto find_genus_at_least = [&](int bound) -> std::optional<std::pair<std::string, SpinKey>> {
        for (const auto& [k, c] : cur.terms()) {
            if (k == base)
                continue;
            SpinKey sk = InvariantKey::parse(k).spin();
            if (sk.genus >= bound)
                return std::make_pair(k, sk);
        }
        return std::nullopt;
    };

    while (auto hit = find_genus_at_least(2)) {
        const auto& [key, sk] = *hit;
        Rational c = cur.coeff(key);
        SymbolicCombo next = cur;
        next.add_term(key, -c);
        next += c * genus_split(SpinKey(sk.genus - 1, sk.parity), SpinKey(1, Parity::even));
        trace.append("split-off-genus-one", cur, next);
        cur = next;
    }

    const std::string odd1 = contact_two_symbol(SpinKey(1, Parity::odd));
    if (!cur.coeff(odd1).is_zero()) {
        Rational c = cur.coeff(odd1);
        SymbolicCombo next = cur;
        next.add_term(odd1, -c);
        next.add_term(contact_two_symbol(SpinKey(1, Parity::even)), c * genus_one_parity_ratio());
        trace.append("equate-parities-at-genus-one", cur, next);
        cur = next;
    }

    const std::string even1 = contact_two_symbol(SpinKey(1, Parity::even));
    if (!cur.coeff(even1).is_zero()) {
        Rational c = cur.coeff(even1);
        SymbolicCombo next = cur;
        next.add_term(even1, -c);
        next += c * genus_descent(SpinKey(1, Parity::even));
        trace.append("descend-to-genus-zero", cur, next);
        cur = next;
    }

    if (cur.size() != 1 || cur.coeff(base).is_zero())
        throw std::logic_error("reduce_genus_zero: reduction did not reach the base symbol");
    return {cur.coeff(base), trace};
}

/// Local contribution of the middle ruled piece in the degree-2 degeneration,
/// by contact data with its two boundary fibers:
///   ((2),(2)) -> 0,  ((2),(1,1)) and ((1,1),(2)) -> 1,
///   ((1,1),(1,1)) -> -4 GT_(2)^{0,+}.
inline SymbolicCombo f1_contribution(const Partition& s1, const Partition& s2) {
    if (s1.degree() != 2 || s2.degree() != 2)
        throw std::invalid_argument("f1_contribution: contact partitions must have degree 2");
    const bool ones1 = s1.all_ones();
    const bool ones2 = s2.all_ones();
    if (!ones1 && !ones2)
        return {};
    if (ones1 != ones2)
        return SymbolicCombo::constant(Rational(1));
    return SymbolicCombo::symbol(contact_two_symbol(SpinKey(0, Parity::even)), Rational(-4));
}

/// One-sided dimension-zero contact value as a combination: transverse
/// contacts have the closed-form value d! * gt_dim0, the (2)-contact stays
/// opaque.
inline SymbolicCombo contact_value_dim0(const SpinKey& s, const Partition& m) {
    if (m.all_ones()) {
        auto nr = normalize_relative(InvariantKey::loc_relative(s, m.degree(), m));
        return SymbolicCombo::constant(nr.factor * gt_dim0(m.degree(), s));
    }
    if (m.degree() == 2)
        return SymbolicCombo::symbol(contact_two_symbol(s));
    throw std::domain_error("contact_value_dim0: no value for contact " + m.str());
}

/// Expands the partition-weighted right-hand side of the degree-2 spin-curve
/// degeneration sum:
///   sum_{m1,m2 |- 2} (|m1||m2| / m1! m2!) GT_{m1}^{h1,p1} [F1 piece] GT_{m2}^{h2,p2}.
/// Must agree with genus_split as a combination.
inline SymbolicCombo split_via_contact_sum(const SpinKey& k1, const SpinKey& k2) {
    SymbolicCombo total;
    for (const Partition& m1 : partitions_of(2)) {
        for (const Partition& m2 : partitions_of(2)) {
            Rational w = Rational(m1.product() * m2.product(),
                                  m1.automorphisms() * m2.automorphisms());
            SymbolicCombo term = contact_value_dim0(k1, m1) * f1_contribution(m1, m2) *
                                 contact_value_dim0(k2, m2);
            total += w * term;
        }
    }
    return total;
}

/// Partition-weighted degenerate sum for the blow-up degeneration:
///   (1/(d!)^2) sum_{m |- d} (|m|/m!)
///       GT^{loc}_{(1^d),m}(prod_{i<=n1} phi^{k_i})
///     * GT^{F0}_{m,(1^d)}(prod_{i>n1} phi^{k_i}).
/// Closed forms are filled automatically; anything else must come from the
/// registry (MissingRegistryEntry names the first absent key).
inline Rational blowup_sum_rhs(int d, const SpinKey& s, const std::vector<int>& ks, int n1,
                              const Registry& reg) {
    if (d < 1)
        throw std::invalid_argument("blowup_sum_rhs: degree must be >= 1");
    if (n1 < 0 || n1 > static_cast<int>(ks.size()))
        throw std::invalid_argument("blowup_sum_rhs: insertion split out of range");
    const std::vector<int> ks_loc(ks.begin(), ks.begin() + n1);
    const std::vector<int> ks_f0(ks.begin() + n1, ks.end());
    const Partition ones = ones_partition(d);
    const BigInt dfact = factorial(d);

    auto f0_factor = [&](const Partition& m) -> Rational {
        if (ks_f0.empty()) {
            // Dimension count: at the dimension-zero slot only transverse
            // contacts admit maps.
            return m.all_ones() ? f0_relative(d, /*two_sided=*/true) : Rational(0);
        }
        InvariantKey key = InvariantKey::f0_relative2(d, m, ones, ks_f0);
        if (auto v = reg.find(key))
            return *v;
        throw MissingRegistryEntry(key.canonical());
    };

    auto loc_factor = [&](const Partition& m) -> Rational {
        if (!ks_loc.empty()) {
            InvariantKey key = InvariantKey::loc_relative2(s, d, ones, m, ks_loc);
            if (auto v = reg.find(key))
                return *v;
            throw MissingRegistryEntry(key.canonical());
        }
        // GT_{(1^d),m} = d! GT_m at dimension zero.
        Rational factor{dfact};
        if (m.all_ones()) {
            if (d <= 2)
                return factor * Rational(dfact) * gt_dim0(d, s);
            InvariantKey key = InvariantKey::absolute(s, d);
            if (auto v = reg.find(key))
                return factor * Rational(dfact) * *v;
            throw MissingRegistryEntry(key.canonical());
        }
        InvariantKey key = InvariantKey::loc_relative(s, d, m);
        if (auto v = reg.find(key))
            return factor * *v;
        throw MissingRegistryEntry(key.canonical());
    };

    Rational total = 0;
    for (const Partition& m : partitions_of(d)) {
        Rational w(m.product(), m.automorphisms());
        Rational f0 = f0_factor(m);
        if (f0.is_zero())
            continue;
        total += w * loc_factor(m) * f0;
    }
    return total / Rational(dfact * dfact);
}

struct DescendantReduction {
    bool ok;
    Rational ratio; // GT_d^{h,p}(tau...) = ratio * GT_d^{0,+}(tau...)
    ReductionTrace trace;
};

/// Checks that the degenerate-sum expansion of GT_d^{loc,h,p}(prod tau) is
/// proportional to the genus-zero expansion with ratio (-1)^p (d=1) resp.
/// (-1)^p 2^h (d=2). The descendant F0 relatives are carried as opaque
/// placeholder symbols, uniform in the insertions.
inline DescendantReduction verify_descendant_reduction(const SpinKey& s, int d) {
    if (d != 1 && d != 2)
        throw std::domain_error("verify_descendant_reduction: only degrees 1 and 2");
    const std::string f0_11 = d == 1 ? "GT|F0|d=1|m1=(1)|m2=(1)|ins=phi:*"
                                     : "GT|F0|d=2|m1=(1,1)|m2=(1,1)|ins=phi:*";
    const std::string f0_2 = "GT|F0|d=2|m1=(2)|m2=(1,1)|ins=phi:*";
    auto lhs_symbol = [&](const SpinKey& sk) {
        return "GT|loc|h=" + std::to_string(sk.genus) + "|p=" + parity_char(sk.parity) +
               "|d=" + std::to_string(d) + "|ins=tau:*";
    };

    // sum-expansion of GT_d^{h,p}(prod tau) over the opaque placeholders;
    // the contact-(2) factor stays a symbol for now.
    auto expand = [&](const SpinKey& sk) {
        if (d == 1)
            return SymbolicCombo::symbol(f0_11, gt_dim0(1, sk));
        SymbolicCombo r = SymbolicCombo::symbol(f0_11, gt_dim0(2, sk) / Rational(2));
        r += SymbolicCombo::symbol(f0_2) * SymbolicCombo::symbol(contact_two_symbol(sk));
        return r;
    };
    // then reduce contact-(2) symbols to the genus-zero one.
    auto resolve = [&](SymbolicCombo c) {
        if (d == 1)
            return c;
        SymbolicCombo out;
        const std::string base = contact_two_symbol(SpinKey(0, Parity::even));
        for (const auto& [mono, coeff] : c.terms()) {
            SymbolicCombo factor = SymbolicCombo::constant(coeff);
            for (const std::string& f : SymbolicCombo::monomial_factors(mono)) {
                const bool contact_two = f.rfind("GT|loc", 0) == 0 &&
                                         f.find("|m1=(2)") != std::string::npos &&
                                         f.find("|ins=") == std::string::npos;
                if (contact_two) {
                    SpinKey sk = InvariantKey::parse(f).spin();
                    factor = factor * SymbolicCombo::symbol(base, reduce_genus_zero(sk).coeff);
                } else {
                    factor = factor * SymbolicCombo::symbol(f);
                }
            }
            out += factor;
        }
        return out;
    };

    const SpinKey base_spin(0, Parity::even);
    const Rational predicted =
        d == 1 ? parity_sign(s.parity) : parity_sign(s.parity) * pow2(s.genus);

    ReductionTrace trace;
    SymbolicCombo start = SymbolicCombo::symbol(lhs_symbol(s)) -
                          predicted * SymbolicCombo::symbol(lhs_symbol(base_spin));
    SymbolicCombo expanded = expand(s) - predicted * expand(base_spin);
    trace.append("expand-degenerate-sum", start, expanded);
    SymbolicCombo resolved = resolve(expanded);
    if (d == 2) {
        trace.append("reduce-contact-two-symbols", expanded, resolved);
    }
    return {resolved.empty(), predicted, trace};
}

} // namespace spingw
