// Acceptance suite: one check per shipped guarantee, one pass/fail line each.
// Exits nonzero if any check fails.

#include "spingw/closed_forms.hpp"
#include "spingw/registry.hpp"
#include "spingw/series.hpp"
#include "spingw/sum_engine.hpp"
#include "spingw/trr_engine.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace spingw;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, long time_limit_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (time_limit_ms > 0 && ms >= time_limit_ms) {
        ok = false;
        detail = "time limit " + std::to_string(time_limit_ms) + " ms exceeded";
    }
    if (!ok)
        ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " (" << ms
              << " ms)";
    if (!ok && !detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << "\n";
}

std::vector<SpinKey> spin_grid(int h_max) {
    std::vector<SpinKey> out;
    for (int h = 0; h <= h_max; ++h) {
        out.emplace_back(h, Parity::even);
        if (h > 0)
            out.emplace_back(h, Parity::odd);
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> insertion_lists(int n, int w) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, int rest, std::pair<int, int> max_pair) -> void {
        if (static_cast<int>(cur.size()) == n) {
            if (rest == 0)
                out.push_back(cur);
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
    return out;
}

long partition_count_oracle(int n) {
    std::vector<std::vector<long>> q(n + 1, std::vector<long>(n + 1, 0));
    for (int k = 0; k <= n; ++k)
        q[0][k] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            q[i][k] = q[i][k - 1] + (i >= k ? q[i - k][k] : 0);
    return q[n][n];
}

} // namespace

int main() {
    criterion(1, "dimension-zero closed forms and their exp relation, h <= 16", 1000,
              [](std::string& detail) {
                  for (const SpinKey& s : spin_grid(16)) {
                      if (gt_dim0(1, s) != parity_sign(s.parity) ||
                          gt_dim0(2, s) != parity_sign(s.parity) * pow2(s.genus - 1)) {
                          detail = InvariantKey::absolute(s, 2).canonical();
                          return false;
                      }
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

    criterion(2, "genus reduction coefficient (-1)^p 2^h with >= h-step trace, h <= 16", 1000,
              [](std::string& detail) {
                  for (const SpinKey& s : spin_grid(16)) {
                      auto r = reduce_genus_zero(s);
                      if (r.coeff != parity_sign(s.parity) * pow2(s.genus) || r.trace.empty() ||
                          static_cast<int>(r.trace.size()) < s.genus) {
                          detail = contact_two_symbol(s);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "degeneration sum equals the degree-2 splitting, h1,h2 <= 8", 5000,
              [](std::string& detail) {
                  for (const SpinKey& a : spin_grid(8))
                      for (const SpinKey& b : spin_grid(8))
                          if (!(split_via_contact_sum(a, b) == genus_split(a, b))) {
                              detail = contact_two_symbol(a) + " , " + contact_two_symbol(b);
                              return false;
                          }
                  return true;
              });

    criterion(4, "recursion base cases by recurrence, k <= 12", 0, [](std::string& detail) {
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

    criterion(5, "relative = (d!)^2 absolute for every on-shell expression, d <= 4, weight <= 5",
              10000, [](std::string& detail) {
                  long cases = 0;
                  for (int d = 1; d <= 4; ++d)
                      for (int n : {3, 4, 5})
                          for (int w = 0; w <= 5; ++w) {
                              int g = w - d + 1;
                              if (g < 0)
                                  continue;
                              for (const auto& ins : insertion_lists(n, w)) {
                                  ++cases;
                                  if (!verify_ap(d, g, ins).ok) {
                                      detail =
                                          MixedExpr(d, g, ExprFlavor::absolute, ins).canonical();
                                      return false;
                                  }
                              }
                          }
                  if (cases < 1000) {
                      detail = "sweep unexpectedly small: " + std::to_string(cases);
                      return false;
                  }
                  return true;
              });

    criterion(6, "descendant closed form at n = 0 equals the dimension-zero value, h <= 16", 0,
              [](std::string& detail) {
                  for (const SpinKey& s : spin_grid(16))
                      for (int d : {1, 2})
                          if (descendant_closed_form(d, s, {}) != gt_dim0(d, s)) {
                              detail = InvariantKey::absolute(s, d).canonical();
                              return false;
                          }
                  return true;
              });

    criterion(7, "blow-up degeneration sum with an empty registry equals the closed forms", 0,
              [](std::string& detail) {
                  Registry empty;
                  for (const SpinKey& s : spin_grid(16))
                      for (int d : {1, 2})
                          if (blowup_sum_rhs(d, s, {}, 0, empty) != gt_dim0(d, s)) {
                              detail = InvariantKey::absolute(s, d).canonical();
                              return false;
                          }
                  return true;
              });

    criterion(8, "partition combinatorics: composition counts and enumeration oracle", 0,
              [](std::string& detail) {
                  for (int d = 1; d <= 12; ++d) {
                      BigInt total = 0;
                      for (const Partition& m : partitions_of(d))
                          total += m.ordered_count();
                      if (total != BigInt(1) << (d - 1)) {
                          detail = "compositions at d=" + std::to_string(d);
                          return false;
                      }
                  }
                  for (int d = 1; d <= 30; ++d)
                      if (static_cast<long>(partitions_of(d).size()) !=
                          partition_count_oracle(d)) {
                          detail = "partition count at d=" + std::to_string(d);
                          return false;
                      }
                  return true;
              });

    criterion(9, "reduction results are independent of the trade order, d <= 4, weight <= 5", 0,
              [](std::string& detail) {
                  for (int d = 1; d <= 4; ++d)
                      for (int n : {3, 4, 5})
                          for (int w = 0; w <= 5; ++w)
                              for (const auto& ins : insertion_lists(n, w))
                                  for (auto fl :
                                       {ExprFlavor::absolute, ExprFlavor::relative_full}) {
                                      MixedExpr e(d, 0, fl, ins);
                                      if (!(reduce_full(e, PickOrder::leftmost_first) ==
                                            reduce_full(e, PickOrder::rightmost_first))) {
                                          detail = e.canonical();
                                          return false;
                                      }
                                  }
                  return true;
              });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
