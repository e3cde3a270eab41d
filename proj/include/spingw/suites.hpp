#pragma once

#include "spingw/closed_forms.hpp"
#include "spingw/registry.hpp"
#include "spingw/series.hpp"
#include "spingw/sum_engine.hpp"
#include "spingw/trr_engine.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace spingw {

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample key when failing
};

struct SuiteOptions {
    int h_max = 16;
    int d_max = 4;
    int weight_max = 5;
    const Registry* registry = nullptr;
};

namespace detail {

inline std::vector<SpinKey> spin_grid(int h_max) {
    std::vector<SpinKey> out;
    for (int h = 0; h <= h_max; ++h) {
        out.emplace_back(h, Parity::even);
        if (h > 0)
            out.emplace_back(h, Parity::odd);
    }
    return out;
}

inline void check(std::vector<IdentityResult>& out, std::string name,
                  const std::function<bool(std::string&)>& body) {
    IdentityResult r;
    r.name = std::move(name);
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

/// Closed-form value of a registry key, when one exists.
inline std::optional<Rational> closed_value_of(const InvariantKey& key) {
    if (key.surface() == Surface::f0) {
        if (!key.insertions().empty())
            return std::nullopt;
        if (key.flavor() == Flavor::relative1 && key.contacts()[0].all_ones())
            return f0_relative(key.degree(), false);
        if (key.flavor() == Flavor::relative2 && key.contacts()[0].all_ones() &&
            key.contacts()[1].all_ones())
            return f0_relative(key.degree(), true);
        return std::nullopt;
    }
    if (key.flavor() == Flavor::absolute) {
        if (key.degree() > 2)
            return std::nullopt;
        if (key.insertions().empty())
            return gt_dim0(key.degree(), key.spin());
        if (key.kind() == InsertionKind::tau)
            return descendant_closed_form(key.degree(), key.spin(), key.insertions());
        return std::nullopt;
    }
    if (!key.insertions().empty())
        return std::nullopt;
    try {
        auto nr = normalize_relative(key);
        if (nr.reduced.flavor() == Flavor::absolute && nr.reduced.degree() <= 2)
            return nr.factor * gt_dim0(nr.reduced.degree(), nr.reduced.spin());
    } catch (const std::domain_error&) {
    }
    return std::nullopt;
}

inline void suite_algebra(std::vector<IdentityResult>& out) {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    auto random_series = [&](int t) {
        DegreeSeries s(t);
        for (int d = 1; d <= t; ++d)
            s.set(d, rnd());
        return s;
    };

    check(out, "series: log(exp(s)) = s at truncation orders 1..12", [&](std::string& detail) {
        for (int t = 1; t <= 12; ++t)
            for (int rep = 0; rep < 6; ++rep) {
                DegreeSeries s = random_series(t);
                if (!(series_log(series_exp(s)) == s)) {
                    detail = s.str();
                    return false;
                }
            }
        return true;
    });

    check(out, "series: exp(a+b) = (1+exp a)(1+exp b) - 1 at truncation orders 1..8",
          [&](std::string& detail) {
              for (int t = 1; t <= 8; ++t)
                  for (int rep = 0; rep < 6; ++rep) {
                      DegreeSeries a = random_series(t);
                      DegreeSeries b = random_series(t);
                      if (!(series_exp(a + b) ==
                            series_mul_one_plus(series_exp(a), series_exp(b)))) {
                          detail = a.str() + " , " + b.str();
                          return false;
                      }
                  }
              return true;
          });

    check(out, "combos: scaling distributes over sums and scalars", [&](std::string& detail) {
        const char* keys[] = {"X", "Y", "Z"};
        for (int rep = 0; rep < 100; ++rep) {
            SymbolicCombo a, b;
            for (int i = 0; i < 3; ++i) {
                a.add_term(keys[i], rnd());
                b.add_term(keys[i], rnd());
            }
            Rational c1 = rnd(), c2 = rnd();
            if (!((c1 + c2) * a == c1 * a + c2 * a) || !(c1 * (a + b) == c1 * a + c1 * b)) {
                detail = a.str();
                return false;
            }
        }
        return true;
    });

    check(out, "rationals: canonical form is closed under field operations",
          [&](std::string& detail) {
              for (int rep = 0; rep < 200; ++rep) {
                  Rational a = rnd(), b = rnd();
                  for (const Rational& v :
                       {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
                      bool canonical =
                          v.denominator() > 0 &&
                          boost::multiprecision::gcd(boost::multiprecision::abs(v.numerator()),
                                                     v.denominator()) == 1;
                      if (!canonical || Rational::parse(v.str()) != v) {
                          detail = v.str();
                          return false;
                      }
                  }
              }
              return true;
          });
}

inline void suite_partitions(std::vector<IdentityResult>& out) {
    check(out, "partition counts match the bounded-part recursion for d <= 30",
          [&](std::string& detail) {
              for (int n = 1; n <= 30; ++n) {
                  std::vector<std::vector<long>> q(n + 1, std::vector<long>(n + 1, 0));
                  for (int k = 0; k <= n; ++k)
                      q[0][k] = 1;
                  for (int i = 1; i <= n; ++i)
                      for (int k = 1; k <= n; ++k)
                          q[i][k] = q[i][k - 1] + (i >= k ? q[i - k][k] : 0);
                  if (static_cast<long>(partitions_of(n).size()) != q[n][n]) {
                      detail = "d=" + std::to_string(n);
                      return false;
                  }
              }
              return true;
          });

    check(out, "sum of l!/m! over partitions of d is 2^(d-1) for d <= 12",
          [&](std::string& detail) {
              for (int d = 1; d <= 12; ++d) {
                  BigInt total = 0;
                  for (const Partition& m : partitions_of(d))
                      total += m.ordered_count();
                  if (total != BigInt(1) << (d - 1)) {
                      detail = "d=" + std::to_string(d);
                      return false;
                  }
              }
              return true;
          });

    check(out, "transverse contact data (1^d) has |m|=1 and m!=d! for d <= 20",
          [&](std::string& detail) {
              for (int d = 1; d <= 20; ++d) {
                  Partition m = ones_partition(d);
                  if (m.product() != 1 || m.automorphisms() != factorial(d)) {
                      detail = m.str();
                      return false;
                  }
              }
              return true;
          });
}

inline void suite_closed(std::vector<IdentityResult>& out, const SuiteOptions& opt) {
    check(out, "exp of the connected dimension-zero series gives the disconnected values",
          [&](std::string& detail) {
              for (const SpinKey& s : spin_grid(opt.h_max)) {
                  DegreeSeries gw(2);
                  gw.set(1, gw_dim0(1, s));
                  gw.set(2, gw_dim0(2, s));
                  DegreeSeries gt = series_exp(gw);
                  if (gt.coeff(1) != gt_dim0(1, s) || gt.coeff(2) != gt_dim0(2, s)) {
                      detail = InvariantKey::absolute(s, 2).canonical();
                      return false;
                  }
              }
              return true;
          });

    check(out, "descendant closed form at n = 0 equals the dimension-zero value",
          [&](std::string& detail) {
              for (const SpinKey& s : spin_grid(opt.h_max))
                  for (int d : {1, 2})
                      if (descendant_closed_form(d, s, {}) != gt_dim0(d, s)) {
                          detail = InvariantKey::absolute(s, d).canonical();
                          return false;
                      }
              return true;
          });

    check(out, "descendant values are symmetric in the insertion exponents",
          [&](std::string& detail) {
              SpinKey s(3, Parity::odd);
              std::vector<int> ks = {0, 1, 2, 2};
              std::mt19937 rng(77);
              for (int d : {1, 2}) {
                  Rational ref = descendant_closed_form(d, s, ks);
                  std::vector<int> perm = ks;
                  for (int rep = 0; rep < 8; ++rep) {
                      std::shuffle(perm.begin(), perm.end(), rng);
                      if (descendant_closed_form(d, s, perm) != ref) {
                          detail = InvariantKey::absolute(s, d, perm).canonical();
                          return false;
                      }
                  }
              }
              return true;
          });

    check(out, "the genus-zero odd spin key is rejected at construction",
          [&](std::string&) {
              try {
                  SpinKey bad(0, Parity::odd);
                  (void)bad;
                  return false;
              } catch (const std::invalid_argument&) {
                  return true;
              }
          });

    if (opt.registry) {
        for (const auto& [key_str, value] : opt.registry->entries()) {
            IdentityResult r;
            r.name = "registry entry agrees with the closed forms: " + key_str;
            try {
                auto closed = closed_value_of(InvariantKey::parse(key_str));
                r.pass = !closed || *closed == value;
                if (!r.pass)
                    r.detail = key_str + " = " + value.str() + ", closed form " + closed->str();
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = e.what();
            }
            out.push_back(std::move(r));
        }
    }
}

inline void suite_sums(std::vector<IdentityResult>& out, const SuiteOptions& opt) {
    check(out, "degree-2 splitting is symmetric (200 random pairs)", [&](std::string& detail) {
        std::mt19937 rng(1618);
        std::uniform_int_distribution<int> genus(0, 12);
        std::uniform_int_distribution<int> par(0, 1);
        for (int rep = 0; rep < 200; ++rep) {
            int h1 = genus(rng), h2 = genus(rng);
            SpinKey a(h1, h1 && par(rng) ? Parity::odd : Parity::even);
            SpinKey b(h2, h2 && par(rng) ? Parity::odd : Parity::even);
            if (!(genus_split(a, b) == genus_split(b, a))) {
                detail = contact_two_symbol(a) + " , " + contact_two_symbol(b);
                return false;
            }
        }
        return true;
    });

    check(out, "the genus-zero piece is neutral for the degree-2 splitting",
          [&](std::string& detail) {
              for (const SpinKey& s : spin_grid(opt.h_max))
                  if (!(genus_split(s, SpinKey(0, Parity::even)) ==
                        SymbolicCombo::symbol(contact_two_symbol(s)))) {
                      detail = contact_two_symbol(s);
                      return false;
                  }
              return true;
          });

    check(out,
          "substituting the reduction coefficients into splitting and descent gives identities",
          [&](std::string& detail) {
              auto value = [](const SymbolicCombo& c) {
                  Rational total = 0;
                  for (const auto& [key, coeff] : c.terms())
                      total += coeff * reduce_genus_zero(InvariantKey::parse(key).spin()).coeff;
                  return total;
              };
              for (const SpinKey& a : spin_grid(8))
                  for (const SpinKey& b : spin_grid(8)) {
                      if (a.genus + b.genus > opt.h_max)
                          continue;
                      SpinKey total(a.genus + b.genus, parity_add(a.parity, b.parity));
                      if (value(genus_split(a, b)) != reduce_genus_zero(total).coeff) {
                          detail = contact_two_symbol(a) + " , " + contact_two_symbol(b);
                          return false;
                      }
                  }
              for (const SpinKey& s : spin_grid(opt.h_max)) {
                  if (!(s.genus >= 2 || (s.genus == 1 && s.parity == Parity::even)))
                      continue;
                  if (value(genus_descent(s)) != reduce_genus_zero(s).coeff) {
                      detail = contact_two_symbol(s);
                      return false;
                  }
              }
              return true;
          });

    check(out, "partition-weighted degeneration sum equals the splitting (h1,h2 <= 8)",
          [&](std::string& detail) {
              for (const SpinKey& a : spin_grid(8))
                  for (const SpinKey& b : spin_grid(8))
                      if (!(split_via_contact_sum(a, b) == genus_split(a, b))) {
                          detail = contact_two_symbol(a) + " , " + contact_two_symbol(b);
                          return false;
                      }
              return true;
          });

    check(out, "blow-up degeneration sum at dimension zero equals the closed forms",
          [&](std::string& detail) {
              Registry empty;
              for (const SpinKey& s : spin_grid(opt.h_max))
                  for (int d : {1, 2})
                      if (blowup_sum_rhs(d, s, {}, 0, empty) != gt_dim0(d, s)) {
                          detail = InvariantKey::absolute(s, d).canonical();
                          return false;
                      }
              return true;
          });

    check(out, "descendant invariants reduce to genus zero with ratio (-1)^p 2^h",
          [&](std::string& detail) {
              for (const SpinKey& s : spin_grid(8))
                  for (int d : {1, 2})
                      if (!verify_descendant_reduction(s, d).ok) {
                          detail = InvariantKey::absolute(s, d).canonical();
                          return false;
                      }
              return true;
          });
}

inline void suite_reduction(std::vector<IdentityResult>& out, const SuiteOptions& opt) {
    for (int h = 0; h <= opt.h_max; ++h) {
        for (Parity p : {Parity::even, Parity::odd}) {
            if (h == 0 && p == Parity::odd) {
                check(out, "genus reduction: the (0,-) spin key is rejected",
                      [&](std::string&) {
                          try {
                              SpinKey bad(0, Parity::odd);
                              (void)bad;
                              return false;
                          } catch (const std::invalid_argument&) {
                              return true;
                          }
                      });
                continue;
            }
            SpinKey s(h, p);
            check(out,
                  "genus reduction: coefficient at (" + std::to_string(h) + "," +
                      parity_char(p) + ") is (-1)^p 2^h with a >= " + std::to_string(h) +
                      "-step trace",
                  [&](std::string& detail) {
                      auto r = reduce_genus_zero(s);
                      bool ok = r.coeff == parity_sign(p) * pow2(h) && !r.trace.empty() &&
                                static_cast<int>(r.trace.size()) >= h;
                      if (!ok)
                          detail = contact_two_symbol(s) + " -> " + r.coeff.str();
                      return ok;
                  });
        }
    }
}

inline void suite_trr(std::vector<IdentityResult>& out, const SuiteOptions& opt) {
    check(out, "recursion base values match the closed forms for k <= 12",
          [&](std::string& detail) {
              for (int k = 1; k <= 12; ++k) {
                  Rational sign((k - 1) % 2 == 0 ? 1 : -1);
                  if (base_absolute(k) != sign / Rational(factorial(k)) ||
                      base_relative(k) != sign * Rational(factorial(k))) {
                      detail = "k=" + std::to_string(k);
                      return false;
                  }
              }
              return true;
          });

    check(out, "no correction survives once the traded power reaches the degree",
          [&](std::string& detail) {
              for (int d = 1; d <= 5; ++d)
                  for (int s = d; s <= 6; ++s)
                      for (auto fl : {ExprFlavor::absolute, ExprFlavor::relative_full}) {
                          MixedExpr e(d, 0, fl, {{s, 0}, {0, 0}, {0, 0}});
                          if (trr_step_terms(e, 0).size() != 1) {
                              detail = e.canonical();
                              return false;
                          }
                      }
              return true;
          });

    auto lists = [](int n, int w) {
        std::vector<std::vector<std::pair<int, int>>> out_lists;
        std::vector<std::pair<int, int>> cur;
        auto rec = [&](auto&& self, int rest, std::pair<int, int> max_pair) -> void {
            if (static_cast<int>(cur.size()) == n) {
                if (rest == 0)
                    out_lists.push_back(cur);
                return;
            }
            for (int s = max_pair.first; s >= 0; --s) {
                int t_start = s == max_pair.first ? max_pair.second : rest;
                for (int t = std::min(t_start, rest - s); t >= 0; --t) {
                    cur.emplace_back(s, t);
                    self(self, rest - s - t, {s, t});
                    cur.pop_back();
                }
            }
        };
        rec(rec, w, {w, w});
        return out_lists;
    };

    check(out, "reduction result does not depend on the trade order",
          [&](std::string& detail) {
              for (int d = 1; d <= std::min(opt.d_max, 4); ++d)
                  for (int n : {3, 4, 5})
                      for (int w = 0; w <= opt.weight_max; ++w)
                          for (const auto& ins : lists(n, w))
                              for (auto fl : {ExprFlavor::absolute, ExprFlavor::relative_full}) {
                                  MixedExpr e(d, 0, fl, ins);
                                  if (!(reduce_full(e, PickOrder::leftmost_first) ==
                                        reduce_full(e, PickOrder::rightmost_first))) {
                                      detail = e.canonical();
                                      return false;
                                  }
                              }
              return true;
          });

    check(out,
          "relative/absolute reductions agree under the factorial identification (on-shell)",
          [&](std::string& detail) {
              for (int d = 1; d <= std::min(opt.d_max, 4); ++d)
                  for (int n : {3, 4, 5})
                      for (int w = 0; w <= opt.weight_max; ++w) {
                          int g = w - d + 1;
                          if (g < 0)
                              continue;
                          for (const auto& ins : lists(n, w))
                              if (!verify_ap(d, g, ins).ok) {
                                  detail = MixedExpr(d, g, ExprFlavor::absolute, ins).canonical();
                                  return false;
                              }
                      }
              return true;
          });

    check(out, "reduction halts within the step budget", [&](std::string& detail) {
        for (int d = 1; d <= 5; ++d)
            for (int w = 0; w <= 8; ++w)
                for (const auto& ins : lists(3, w))
                    for (auto fl : {ExprFlavor::absolute, ExprFlavor::relative_full}) {
                        MixedExpr e(d, 0, fl, ins);
                        if (e.total_tau() > 8)
                            continue;
                        ReduceStats stats;
                        reduce_full(e, PickOrder::leftmost_first, &stats);
                        long buckets = static_cast<long>(stats.symbols_touched.size());
                        if (stats.steps > buckets ||
                            stats.steps > e.total_tau() * std::max(1L, buckets)) {
                            detail = e.canonical();
                            return false;
                        }
                    }
        return true;
    });
}

} // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"algebra", "partitions", "closed",
                                                   "sums",    "reduction",  "trr"};
    return names;
}

/// Runs one named identity suite ("all" runs every suite in order).
inline std::vector<IdentityResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<IdentityResult> out;
    bool all = name == "all";
    bool known = all;
    if (all || name == "algebra")
        detail::suite_algebra(out), known = true;
    if (all || name == "partitions")
        detail::suite_partitions(out), known = true;
    if (all || name == "closed")
        detail::suite_closed(out, opt), known = true;
    if (all || name == "sums")
        detail::suite_sums(out, opt), known = true;
    if (all || name == "reduction")
        detail::suite_reduction(out, opt), known = true;
    if (all || name == "trr")
        detail::suite_trr(out, opt), known = true;
    if (!known)
        throw std::invalid_argument("unknown suite \"" + name + "\"");
    return out;
}

} // namespace spingw
