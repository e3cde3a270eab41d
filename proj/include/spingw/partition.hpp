#pragma once

#include "spingw/rational.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spingw {

/// Partition of a positive integer; parts stored nondecreasing (the canonical
/// order used everywhere for hashing/equality).
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("Partition: parts must be nonempty");
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("Partition: parts must be >= 1");
        std::sort(parts_.begin(), parts_.end());
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// |m| = product of parts.
    BigInt product() const {
        BigInt r = 1;
        for (int p : parts_)
            r *= p;
        return r;
    }

    /// m! = order of the group permuting equal parts: prod over distinct part
    /// values of (multiplicity)!.
    BigInt automorphisms() const {
        BigInt r = 1;
        int run = 1;
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i] == parts_[i - 1])
                r *= ++run;
            else
                run = 1;
        }
        return r;
    }

    /// Number of ordered sequences with this multiset of parts: l! / m!.
    BigInt ordered_count() const { return factorial(length()) / automorphisms(); }

    bool all_ones() const { return parts_.back() == 1; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    /// Accepts "(1,1,2)"; tokens may use repeat shorthand, e.g. "(1^4)".
    static Partition parse(std::string_view text) {
        auto bad = [&] {
            throw std::invalid_argument("Partition: cannot parse \"" + std::string(text) + "\"");
        };
        if (text.size() < 3 || text.front() != '(' || text.back() != ')')
            bad();
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto comma = body.find(',', pos);
            std::string_view tok =
                body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            auto caret = tok.find('^');
            std::string_view value = tok.substr(0, caret);
            int repeat = 1;
            if (caret != std::string_view::npos) {
                repeat = parse_int(tok.substr(caret + 1));
                if (repeat < 1)
                    bad();
            }
            int v = parse_int(value);
            if (v < 1)
                bad();
            parts.insert(parts.end(), repeat, v);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    static int parse_int(std::string_view s) {
        if (s.empty() || s.size() > 9)
            return -1;
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                return -1;
            v = v * 10 + (c - '0');
        }
        return v;
    }

    std::vector<int> parts_;
};

inline Partition ones_partition(int d) { return Partition(std::vector<int>(d, 1)); }

/// Every partition of d exactly once, in lexicographic order of the
/// nondecreasing part lists, e.g. 3 -> (1,1,1), (1,2), (3).
inline std::vector<Partition> partitions_of(int d) {
    if (d < 1)
        throw std::invalid_argument("partitions_of: degree must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int min_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = min_part; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, 1);
    return out;
}

} // namespace spingw
