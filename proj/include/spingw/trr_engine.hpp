#pragma once

#include "spingw/combo.hpp"
#include "spingw/rational.hpp"
#include "spingw/trace.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spingw {

enum class ExprFlavor { absolute, relative_full };

/// Genus-zero-target descendant expression: degree d, domain genus g, and per
/// insertion a pair (s, t) of descendant exponents. In the absolute flavor s
/// counts cotangent-line powers and t stabilized-curve classes; in the
/// relative flavor (transverse contact with two fixed fibers) s counts plain
/// and t pulled-back stabilized-curve classes. Every insertion carries the
/// fiber class F*.
///
/// Canonical form sorts insertions descending by (s, t); serialization
/// "GW|abs|d=2|g=0|ins=(1,0);(0,0);(0,0)" is injective on canonical forms.
class MixedExpr {
public:
    MixedExpr(int degree, int genus, ExprFlavor flavor, std::vector<std::pair<int, int>> ins)
        : degree_(degree), genus_(genus), flavor_(flavor), ins_(std::move(ins)) {
        if (degree_ < 1)
            throw std::invalid_argument("MixedExpr: degree must be >= 1");
        if (genus_ < 0)
            throw std::invalid_argument("MixedExpr: genus must be >= 0");
        for (const auto& [s, t] : ins_)
            if (s < 0 || t < 0)
                throw std::invalid_argument("MixedExpr: exponents must be >= 0");
        std::sort(ins_.begin(), ins_.end(), std::greater<>());
    }

    int degree() const { return degree_; }
    int genus() const { return genus_; }
    ExprFlavor flavor() const { return flavor_; }
    const std::vector<std::pair<int, int>>& insertions() const { return ins_; }
    int size() const { return static_cast<int>(ins_.size()); }

    int total_tau() const {
        int r = 0;
        for (const auto& [s, t] : ins_)
            r += s;
        return r;
    }
    int total_weight() const {
        int r = 0;
        for (const auto& [s, t] : ins_)
            r += s + t;
        return r;
    }
    bool pure_phi() const { return total_tau() == 0; }

    /// Dimension constraint for a connected genus-g domain.
    bool on_shell() const { return total_weight() == degree_ + genus_ - 1; }

    std::string canonical() const {
        std::string out = "GW|";
        out += flavor_ == ExprFlavor::absolute ? "abs" : "rel";
        out += "|d=" + std::to_string(degree_) + "|g=" + std::to_string(genus_) + "|ins=";
        for (std::size_t i = 0; i < ins_.size(); ++i) {
            if (i)
                out += ';';
            out += "(" + std::to_string(ins_[i].first) + "," + std::to_string(ins_[i].second) + ")";
        }
        return out;
    }

    static MixedExpr parse(std::string_view text) {
        auto bad = [&] {
            throw std::invalid_argument("MixedExpr: cannot parse \"" + std::string(text) + "\"");
        };
        auto expect = [&](std::string_view& v, std::string_view prefix) {
            if (v.substr(0, prefix.size()) != prefix)
                bad();
            v.remove_prefix(prefix.size());
        };
        auto take_int = [&](std::string_view& v) {
            int r = 0;
            bool any = false;
            while (!v.empty() && v.front() >= '0' && v.front() <= '9') {
                r = r * 10 + (v.front() - '0');
                v.remove_prefix(1);
                any = true;
            }
            if (!any)
                bad();
            return r;
        };
        std::string_view v = text;
        expect(v, "GW|");
        ExprFlavor flavor;
        if (v.substr(0, 3) == "abs")
            flavor = ExprFlavor::absolute;
        else if (v.substr(0, 3) == "rel")
            flavor = ExprFlavor::relative_full;
        else {
            bad();
            throw std::logic_error("unreachable");
        }
        v.remove_prefix(3);
        expect(v, "|d=");
        int d = take_int(v);
        expect(v, "|g=");
        int g = take_int(v);
        expect(v, "|ins=");
        std::vector<std::pair<int, int>> ins;
        while (!v.empty()) {
            expect(v, "(");
            int s = take_int(v);
            expect(v, ",");
            int t = take_int(v);
            expect(v, ")");
            ins.emplace_back(s, t);
            if (!v.empty())
                expect(v, ";");
        }
        return MixedExpr(d, g, flavor, std::move(ins));
    }

    friend bool operator==(const MixedExpr&, const MixedExpr&) = default;

private:
    int degree_;
    int genus_;
    ExprFlavor flavor_;
    std::vector<std::pair<int, int>> ins_;
};

/// GW_{k,0}(tau_{k-1}(F*) F*) = (-1)^{k-1}/k!, computed by the recurrence
/// B(k) = -(1/k) B(k-1), B(1) = 1 (divisor step, then one recursion step with
/// the stabilized class vanishing on the three-pointed genus-zero space), and
/// checked against the closed form.
inline Rational base_absolute(int k) {
    if (k < 1)
        throw std::domain_error("base_absolute: k must be >= 1");
    Rational b = 1;
    for (int i = 2; i <= k; ++i)
        b *= Rational(-1, i);
    Rational closed((k - 1) % 2 == 0 ? BigInt(1) : BigInt(-1), factorial(k));
    if (b != closed)
        throw std::logic_error("base_absolute: recurrence disagrees with closed form");
    return b;
}

/// GW_{(1^k),(1^k),0}(phi^{k-1}(F*) F*) = (-1)^{k-1} k!, by the recurrence
/// B(k) = -k B(k-1), B(1) = 1, checked against the closed form.
inline Rational base_relative(int k) {
    if (k < 1)
        throw std::domain_error("base_relative: k must be >= 1");
    Rational b = 1;
    for (int i = 2; i <= k; ++i)
        b *= Rational(-i);
    Rational closed{BigInt((k - 1) % 2 == 0 ? 1 : -1) * factorial(k)};
    if (b != closed)
        throw std::logic_error("base_relative: recurrence disagrees with closed form");
    return b;
}

struct StepTerm {
    Rational coeff;
    MixedExpr expr;
};

/// One recursion step at insertion j (requires s_j >= 1, n >= 3): the shift
/// term trades (s_j, t_j) for (s_j - 1, t_j + 1); when s_j < d a single
/// correction term of degree d - s_j survives, with insertion j dropped to
/// its pure phi part. The correction coefficient is the dimension-forced
/// genus-zero factor, i.e. minus the matching base value (times the square of
/// the contact-choice binomial in the relative flavor).
inline std::vector<StepTerm> trr_step_terms(const MixedExpr& e, int j) {
    if (e.size() < 3)
        throw std::domain_error("trr step: needs at least 3 insertions");
    if (j < 0 || j >= e.size())
        throw std::out_of_range("trr step: insertion index out of range");
    const auto [s, t] = e.insertions()[j];
    if (s < 1)
        throw std::domain_error("trr step: insertion has no descendant power to trade");

    std::vector<StepTerm> out;
    auto ins = e.insertions();
    ins[j] = {s - 1, t + 1};
    out.push_back({Rational(1), MixedExpr(e.degree(), e.genus(), e.flavor(), std::move(ins))});

    const int k = s;
    if (k < e.degree()) {
        Rational c = e.flavor() == ExprFlavor::absolute
                         ? -base_absolute(k)
                         : -Rational(binomial(e.degree(), k) * binomial(e.degree(), k)) *
                               base_relative(k);
        auto corr = e.insertions();
        corr[j] = {0, t};
        out.push_back({c, MixedExpr(e.degree() - k, e.genus(), e.flavor(), std::move(corr))});
    }
    return out;
}

inline SymbolicCombo step_to_combo(const std::vector<StepTerm>& terms) {
    SymbolicCombo r;
    for (const auto& [c, expr] : terms)
        r.add_term(expr.canonical(), c);
    return r;
}

inline SymbolicCombo trr_absolute_step(const MixedExpr& e, int j) {
    if (e.flavor() != ExprFlavor::absolute)
        throw std::domain_error("trr_absolute_step: expression is not absolute");
    return step_to_combo(trr_step_terms(e, j));
}

inline SymbolicCombo trr_relative_step(const MixedExpr& e, int j) {
    if (e.flavor() != ExprFlavor::relative_full)
        throw std::domain_error("trr_relative_step: expression is not relative");
    return step_to_combo(trr_step_terms(e, j));
}

struct DivisorStep {
    Rational factor; // value(expr) = factor * value(input)
    MixedExpr expr;
};

/// Appending one plain F* insertion multiplies the invariant by the degree.
inline DivisorStep append_divisor(const MixedExpr& e) {
    auto ins = e.insertions();
    ins.emplace_back(0, 0);
    return {Rational(e.degree()), MixedExpr(e.degree(), e.genus(), e.flavor(), std::move(ins))};
}

/// Removing a plain F* insertion divides by the degree; descended insertions
/// cannot be removed this way.
inline DivisorStep remove_divisor(const MixedExpr& e, int j) {
    if (j < 0 || j >= e.size())
        throw std::out_of_range("remove_divisor: insertion index out of range");
    const auto [s, t] = e.insertions()[j];
    if (s + t > 0)
        throw std::domain_error("remove_divisor: insertion is descended");
    auto ins = e.insertions();
    ins.erase(ins.begin() + j);
    return {Rational(1, e.degree()), MixedExpr(e.degree(), e.genus(), e.flavor(), std::move(ins))};
}

enum class PickOrder { leftmost_first, rightmost_first };

struct ReduceStats {
    long steps = 0;
    std::set<int> degrees_touched;
    std::set<std::string> symbols_touched; // buckets (d, g, t-powers, flavor) seen
};

/// Rewrites every reducible symbol of a combination of MixedExpr symbols
/// until all terms are pure phi. Deterministic: the term with the largest
/// total descendant power goes first (ties by key order), the traded
/// insertion within it is chosen by `order`. Step results always carry
/// strictly smaller descendant power than the expanded term, so every symbol
/// is expanded at most once and the rewriting terminates.
inline SymbolicCombo reduce_combo(SymbolicCombo cur, PickOrder order,
                                  ReductionTrace* trace = nullptr,
                                  ReduceStats* stats = nullptr) {
    for (;;) {
        std::optional<std::pair<std::string, MixedExpr>> hit;
        int best = 0;
        for (const auto& [key, c] : cur.terms()) {
            MixedExpr e = MixedExpr::parse(key);
            if (e.total_tau() > best) {
                best = e.total_tau();
                hit.emplace(key, std::move(e));
            }
        }
        if (!hit)
            return cur;
        const auto& [key, e] = *hit;

        int j = -1;
        for (int i = 0; i < e.size(); ++i) {
            if (e.insertions()[i].first >= 1) {
                j = i;
                if (order == PickOrder::leftmost_first)
                    break;
            }
        }
        Rational c = cur.coeff(key);
        SymbolicCombo next = cur;
        next.add_term(key, -c);
        if (stats) {
            ++stats->steps;
            stats->degrees_touched.insert(e.degree());
            stats->symbols_touched.insert(key);
        }
        for (const auto& [sc, se] : trr_step_terms(e, j)) {
            next.add_term(se.canonical(), c * sc);
            if (stats) {
                stats->degrees_touched.insert(se.degree());
                stats->symbols_touched.insert(se.canonical());
            }
        }
        if (trace)
            trace->append(e.flavor() == ExprFlavor::absolute ? "trr-absolute" : "trr-relative",
                          cur, next);
        cur = std::move(next);
    }
}

/// Full reduction of one expression to a combination of pure-phi symbols.
/// A pure-phi expression reduces to itself in zero steps.
inline SymbolicCombo reduce_full(const MixedExpr& e, PickOrder order = PickOrder::leftmost_first,
                                 ReduceStats* stats = nullptr) {
    return reduce_combo(SymbolicCombo::symbol(e.canonical()), order, nullptr, stats);
}

/// Small-n entry point: pad with two plain F* insertions, reduce, divide by
/// the squared degree the two divisor steps introduced.
inline SymbolicCombo reduce_via_divisor_padding(const MixedExpr& e,
                                                PickOrder order = PickOrder::leftmost_first) {
    auto d1 = append_divisor(e);
    auto d2 = append_divisor(d1.expr);
    return reduce_full(d2.expr, order) * (Rational(1) / (d1.factor * d2.factor));
}

struct ApResult {
    bool ok;
    ReductionTrace trace;
};

/// Reduces the absolute and relative versions of one insertion list in
/// parallel and checks that, after identifying each relative pure-phi symbol
/// of degree d' with (d'!)^2 times its absolute counterpart, the relative
/// combination is (d!)^2 times the absolute one. The trace reduces the
/// difference to the empty combination.
inline ApResult verify_ap(int d, int g, const std::vector<std::pair<int, int>>& insertions) {
    MixedExpr abs_expr(d, g, ExprFlavor::absolute, insertions);
    MixedExpr rel_expr(d, g, ExprFlavor::relative_full, insertions);
    if (abs_expr.size() < 3)
        throw std::domain_error("verify_ap: needs at least 3 insertions");

    const Rational dfact2{factorial(d) * factorial(d)};
    ReductionTrace trace;
    SymbolicCombo cur = SymbolicCombo::symbol(rel_expr.canonical()) -
                        dfact2 * SymbolicCombo::symbol(abs_expr.canonical());
    cur = reduce_combo(std::move(cur), PickOrder::leftmost_first, &trace);

    SymbolicCombo identified;
    for (const auto& [key, c] : cur.terms()) {
        MixedExpr e = MixedExpr::parse(key);
        if (e.flavor() == ExprFlavor::relative_full) {
            MixedExpr abs_twin(e.degree(), e.genus(), ExprFlavor::absolute, e.insertions());
            identified.add_term(abs_twin.canonical(),
                                c * Rational(factorial(e.degree()) * factorial(e.degree())));
        } else {
            identified.add_term(key, c);
        }
    }
    trace.append("identify-relative-with-absolute", cur, identified);
    return {identified.empty(), trace};
}

} // namespace spingw
