#pragma once

#include "spingw/partition.hpp"
#include "spingw/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spingw {

enum class Parity { even, odd };

inline char parity_char(Parity p) { return p == Parity::even ? '+' : '-'; }

inline Parity parse_parity(std::string_view s) {
    if (s == "+" || s == "even")
        return Parity::even;
    if (s == "-" || s == "odd")
        return Parity::odd;
    throw std::invalid_argument("parity: expected \"+\" or \"-\", got \"" + std::string(s) + "\"");
}

inline Parity parity_add(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}

/// (-1)^p.
inline Rational parity_sign(Parity p) { return p == Parity::even ? Rational(1) : Rational(-1); }

/// Genus and parity of a spin curve. The only genus-zero spin curve is even,
/// so (0, odd) is rejected at construction.
struct SpinKey {
    int genus;
    Parity parity;

    SpinKey(int h, Parity p) : genus(h), parity(p) {
        if (h < 0)
            throw std::invalid_argument("SpinKey: genus must be >= 0");
        if (h == 0 && p == Parity::odd)
            throw std::invalid_argument("SpinKey: (0, odd) is not a spin curve");
    }

    friend bool operator==(const SpinKey&, const SpinKey&) = default;
};

enum class Surface { loc, f0 };
enum class Flavor { absolute, relative1, relative2 };
enum class InsertionKind { tau, phi };

/// Canonical identity of an invariant: either a local spin-curve invariant
/// (surface loc, carries genus/parity) or a relative invariant of the
/// product ruled surface (surface F0, no spin data).
///
/// Canonical form: insertion exponents sorted nondecreasing (all insertion
/// classes are the fiber F*, so invariants are symmetric in them); for loc
/// keys with two contact partitions the pair is sorted (both fibers carry
/// fundamental-class constraints, so the invariant is symmetric under swap).
/// F0 contact pairs are NOT sorted: the first fiber carries point
/// constraints, the second the fundamental class.
///
/// Serialization is injective on canonical forms:
///   GT|loc|h=<h>|p=<+|->|d=<d>[|m1=(..)[|m2=(..)]][|ins=<tau|phi>:<k1,..>]
///   GT|F0|d=<d>|m1=(..)[|m2=(..)][|ins=phi:<k1,..>]
class InvariantKey {
public:
    static InvariantKey absolute(const SpinKey& spin, int d, std::vector<int> ks = {},
                                 InsertionKind kind = InsertionKind::tau) {
        return InvariantKey(Surface::loc, spin, d, {}, std::move(ks), kind);
    }

    static InvariantKey loc_relative(const SpinKey& spin, int d, Partition m1,
                                     std::vector<int> ks = {},
                                     InsertionKind kind = InsertionKind::phi) {
        return InvariantKey(Surface::loc, spin, d, {std::move(m1)}, std::move(ks), kind);
    }

    static InvariantKey loc_relative2(const SpinKey& spin, int d, Partition m1, Partition m2,
                                      std::vector<int> ks = {},
                                      InsertionKind kind = InsertionKind::phi) {
        return InvariantKey(Surface::loc, spin, d, {std::move(m1), std::move(m2)}, std::move(ks),
                            kind);
    }

    static InvariantKey f0_relative1(int d, Partition m1, std::vector<int> ks = {}) {
        return InvariantKey(Surface::f0, std::nullopt, d, {std::move(m1)}, std::move(ks),
                            InsertionKind::phi);
    }

    static InvariantKey f0_relative2(int d, Partition m1, Partition m2, std::vector<int> ks = {}) {
        return InvariantKey(Surface::f0, std::nullopt, d, {std::move(m1), std::move(m2)},
                            std::move(ks), InsertionKind::phi);
    }

    Surface surface() const { return surface_; }
    const SpinKey& spin() const {
        if (!spin_)
            throw std::logic_error("InvariantKey: F0 key carries no spin data");
        return *spin_;
    }
    int degree() const { return degree_; }
    Flavor flavor() const {
        return contacts_.empty()   ? Flavor::absolute
               : contacts_.size() == 1 ? Flavor::relative1
                                       : Flavor::relative2;
    }
    const std::vector<Partition>& contacts() const { return contacts_; }
    const std::vector<int>& insertions() const { return insertions_; }
    InsertionKind kind() const { return kind_; }

    std::string canonical() const {
        std::string out = "GT|";
        out += surface_ == Surface::loc ? "loc" : "F0";
        if (surface_ == Surface::loc) {
            out += "|h=" + std::to_string(spin_->genus);
            out += "|p=";
            out += parity_char(spin_->parity);
        }
        out += "|d=" + std::to_string(degree_);
        if (!contacts_.empty())
            out += "|m1=" + contacts_[0].str();
        if (contacts_.size() == 2)
            out += "|m2=" + contacts_[1].str();
        if (!insertions_.empty()) {
            out += "|ins=";
            out += kind_ == InsertionKind::tau ? "tau:" : "phi:";
            for (std::size_t i = 0; i < insertions_.size(); ++i) {
                if (i)
                    out += ',';
                out += std::to_string(insertions_[i]);
            }
        }
        return out;
    }

    /// Human-readable form, e.g. "GT_(2)^{loc,0,+}" or "GT_2^{loc,3,-}(tau_1)".
    std::string pretty() const {
        std::string out = "GT_";
        if (contacts_.empty()) {
            out += std::to_string(degree_);
        } else {
            out += contacts_[0].str();
            if (contacts_.size() == 2)
                out += "," + contacts_[1].str();
        }
        out += "^{";
        if (surface_ == Surface::loc) {
            out += "loc," + std::to_string(spin_->genus) + ",";
            out += parity_char(spin_->parity);
        } else {
            out += "F0";
        }
        out += "}";
        if (!insertions_.empty()) {
            out += "(";
            const char* name = kind_ == InsertionKind::tau ? "tau_" : "phi_";
            for (std::size_t i = 0; i < insertions_.size(); ++i) {
                if (i)
                    out += ' ';
                out += name + std::to_string(insertions_[i]);
            }
            out += ")";
        }
        return out;
    }

    static InvariantKey parse(std::string_view text) {
        auto bad = [&](const std::string& why) {
            throw std::invalid_argument("InvariantKey: " + why + " in \"" + std::string(text) +
                                        "\"");
        };
        std::vector<std::string_view> seg;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto bar = text.find('|', pos);
            seg.push_back(text.substr(pos, bar == std::string_view::npos ? bar : bar - pos));
            if (bar == std::string_view::npos)
                break;
            pos = bar + 1;
        }
        if (seg.size() < 3 || seg[0] != "GT")
            bad("expected GT|<surface>|...");
        bool loc = seg[1] == "loc";
        if (!loc && seg[1] != "F0")
            bad("unknown surface");

        std::size_t i = 2;
        auto take = [&](std::string_view prefix) -> std::optional<std::string_view> {
            if (i < seg.size() && seg[i].substr(0, prefix.size()) == prefix) {
                auto v = seg[i].substr(prefix.size());
                ++i;
                return v;
            }
            return std::nullopt;
        };

        std::optional<SpinKey> spin;
        if (loc) {
            auto h = take("h=");
            auto p = take("p=");
            if (!h || !p)
                bad("loc key needs h= and p=");
            spin = SpinKey(to_int(*h, bad), parse_parity(*p));
        }
        auto dseg = take("d=");
        if (!dseg)
            bad("missing d=");
        int d = to_int(*dseg, bad);

        std::vector<Partition> contacts;
        if (auto m1 = take("m1="))
            contacts.push_back(Partition::parse(*m1));
        if (auto m2 = take("m2=")) {
            if (contacts.empty())
                bad("m2= without m1=");
            contacts.push_back(Partition::parse(*m2));
        }

        std::vector<int> ks;
        InsertionKind kind = InsertionKind::tau;
        if (auto ins = take("ins=")) {
            std::string_view v = *ins;
            if (v.substr(0, 4) == "tau:")
                kind = InsertionKind::tau;
            else if (v.substr(0, 4) == "phi:")
                kind = InsertionKind::phi;
            else
                bad("ins= must start with tau: or phi:");
            v.remove_prefix(4);
            if (v.empty())
                bad("empty insertion list");
            std::size_t q = 0;
            while (q <= v.size()) {
                auto comma = v.find(',', q);
                ks.push_back(to_int(v.substr(q, comma == std::string_view::npos ? comma : comma - q), bad));
                if (comma == std::string_view::npos)
                    break;
                q = comma + 1;
            }
        }
        if (i != seg.size())
            bad("unexpected trailing segment");
        return InvariantKey(loc ? Surface::loc : Surface::f0, spin, d, std::move(contacts),
                            std::move(ks), kind);
    }

    friend bool operator==(const InvariantKey& a, const InvariantKey& b) {
        return a.canonical() == b.canonical();
    }

private:
    InvariantKey(Surface surface, std::optional<SpinKey> spin, int degree,
                 std::vector<Partition> contacts, std::vector<int> insertions, InsertionKind kind)
        : surface_(surface),
          spin_(spin),
          degree_(degree),
          contacts_(std::move(contacts)),
          kind_(kind),
          insertions_(std::move(insertions)) {
        if (degree_ < 1)
            throw std::invalid_argument("InvariantKey: degree must be >= 1");
        if (surface_ == Surface::loc && !spin_)
            throw std::invalid_argument("InvariantKey: loc key needs spin data");
        if (surface_ == Surface::f0) {
            if (spin_)
                throw std::invalid_argument("InvariantKey: F0 key carries no spin data");
            if (contacts_.empty())
                throw std::invalid_argument("InvariantKey: F0 key needs contact data");
        }
        for (const Partition& m : contacts_)
            if (m.degree() != degree_)
                throw std::invalid_argument("InvariantKey: contact partition degree mismatch");
        for (int k : insertions_)
            if (k < 0)
                throw std::invalid_argument("InvariantKey: insertion exponents must be >= 0");
        std::sort(insertions_.begin(), insertions_.end());
        // Both fibers of a loc two-contact invariant carry the same constraint.
        if (surface_ == Surface::loc && contacts_.size() == 2 && contacts_[1] < contacts_[0])
            std::swap(contacts_[0], contacts_[1]);
        if (insertions_.empty())
            kind_ = contacts_.empty() ? InsertionKind::tau : InsertionKind::phi;
    }

    template <typename Bad>
    static int to_int(std::string_view s, Bad bad) {
        if (s.empty() || s.size() > 9)
            bad("bad integer");
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                bad("bad integer");
            v = v * 10 + (c - '0');
        }
        return v;
    }

    Surface surface_;
    std::optional<SpinKey> spin_;
    int degree_;
    std::vector<Partition> contacts_;
    InsertionKind kind_;
    std::vector<int> insertions_;
};

} // namespace spingw
