#include "spingw/closed_forms.hpp"
#include "spingw/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace spingw;

namespace {

std::vector<SpinKey> spin_sweep(int h_max) {
    std::vector<SpinKey> out;
    for (int h = 0; h <= h_max; ++h) {
        out.emplace_back(h, Parity::even);
        if (h > 0)
            out.emplace_back(h, Parity::odd);
    }
    return out;
}

} // namespace

TEST_CASE("dimension-zero connected values") {
    CHECK(gw_dim0(1, SpinKey(3, Parity::odd)) == Rational(-1));
    CHECK(gw_dim0(2, SpinKey(0, Parity::even)) == Rational(0));
    CHECK(gw_dim0(2, SpinKey(2, Parity::odd)) == Rational(-5, 2));
    CHECK_THROWS_AS(gw_dim0(3, SpinKey(1, Parity::even)), std::domain_error);
}

TEST_CASE("dimension-zero disconnected values") {
    CHECK(gt_dim0(1, SpinKey(5, Parity::even)) == Rational(1));
    CHECK(gt_dim0(2, SpinKey(3, Parity::even)) == Rational(4));
    CHECK(gt_dim0(2, SpinKey(0, Parity::even)) == Rational(1, 2));
    CHECK(gt_dim0(2, SpinKey(64, Parity::even)) == Rational(BigInt(1) << 63));
    CHECK_THROWS_AS(gt_dim0(0, SpinKey(1, Parity::even)), std::domain_error);
}

TEST_CASE("exponentiating the connected series gives the disconnected one") {
    for (const SpinKey& s : spin_sweep(16)) {
        DegreeSeries gw(2);
        gw.set(1, gw_dim0(1, s));
        gw.set(2, gw_dim0(2, s));
        DegreeSeries gt = series_exp(gw);
        CHECK(gt.coeff(1) == gt_dim0(1, s));
        CHECK(gt.coeff(2) == gt_dim0(2, s));
        // and back
        DegreeSeries back = series_log(gt);
        CHECK(back.coeff(2) == gw_dim0(2, s));
    }
}

TEST_CASE("descendant closed forms") {
    CHECK(descendant_closed_form(1, SpinKey(4, Parity::even), {0}) == Rational(1));
    CHECK(descendant_closed_form(1, SpinKey(4, Parity::odd), {0}) == Rational(-1));
    CHECK(descendant_closed_form(2, SpinKey(1, Parity::even), {1}) == Rational(-2, 3));
    CHECK_THROWS_AS(descendant_closed_form(3, SpinKey(1, Parity::even), {}), std::domain_error);

    // n = 0 reduces to the dimension-zero closed form
    for (const SpinKey& s : spin_sweep(16)) {
        CHECK(descendant_closed_form(1, s, {}) == gt_dim0(1, s));
        CHECK(descendant_closed_form(2, s, {}) == gt_dim0(2, s));
    }
}

TEST_CASE("descendant values do not depend on insertion order") {
    std::mt19937 rng(555);
    std::vector<int> ks = {0, 1, 2, 3, 1};
    SpinKey s(2, Parity::odd);
    Rational v1 = descendant_closed_form(1, s, ks);
    Rational v2 = descendant_closed_form(2, s, ks);
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(ks.begin(), ks.end(), rng);
        CHECK(descendant_closed_form(1, s, ks) == v1);
        CHECK(descendant_closed_form(2, s, ks) == v2);
    }
}

TEST_CASE("transverse contact values of the product surface") {
    CHECK(f0_relative(3, false) == Rational(1));
    CHECK(f0_relative(3, true) == Rational(6));
    CHECK(f0_relative(1, true) == Rational(1));
    CHECK_THROWS_AS(f0_relative(0, true), std::domain_error);
}

TEST_CASE("relative normalization rewrites") {
    SpinKey s(3, Parity::odd);
    auto two_sided = normalize_relative(
        InvariantKey::loc_relative2(s, 2, Partition({1, 1}), Partition({1, 1})));
    CHECK(two_sided.factor == Rational(4));
    CHECK(two_sided.reduced == InvariantKey::absolute(s, 2));
    // value check: 4 * gt_dim0 = (-1)^p 2^{h+1}
    CHECK(two_sided.factor * gt_dim0(2, s) == parity_sign(s.parity) * pow2(s.genus + 1));

    auto mixed = normalize_relative(
        InvariantKey::loc_relative2(s, 2, Partition({2}), Partition({1, 1})));
    CHECK(mixed.factor == Rational(2));
    CHECK(mixed.reduced == InvariantKey::loc_relative(s, 2, Partition({2})));

    auto one = normalize_relative(InvariantKey::loc_relative(s, 1, Partition({1})));
    CHECK(one.factor == Rational(1));
    CHECK(one.reduced == InvariantKey::absolute(s, 1));

    auto ones4 = normalize_relative(InvariantKey::loc_relative(s, 4, ones_partition(4)));
    CHECK(ones4.factor == Rational(24));

    CHECK_THROWS_AS(normalize_relative(InvariantKey::loc_relative(s, 2, Partition({2}))),
                    std::domain_error);
    CHECK_THROWS_AS(normalize_relative(InvariantKey::absolute(s, 2)), std::domain_error);
    CHECK_THROWS_AS(
        normalize_relative(InvariantKey::loc_relative(s, 2, Partition({1, 1}), {1})),
        std::domain_error);
    CHECK_THROWS_AS(
        normalize_relative(InvariantKey::f0_relative1(2, Partition({1, 1}))),
        std::domain_error);
}

TEST_CASE("euler characteristic from the dimension constraint") {
    CHECK(dimension_chi(InvariantKey::absolute(SpinKey(0, Parity::even), 2)) == 4);
    CHECK(dimension_chi(InvariantKey::absolute(SpinKey(1, Parity::even), 1)) == 0);
    for (int h = 0; h <= 5; ++h) {
        SpinKey s(h, Parity::even);
        CHECK(dimension_chi(InvariantKey::loc_relative2(s, 2, Partition({1, 1}),
                                                        Partition({1, 1}))) == 4 - 4 * h);
        CHECK(dimension_chi(InvariantKey::loc_relative(s, 2, Partition({2}))) == 2 - 4 * h);
    }
    CHECK(dimension_chi(InvariantKey::absolute(SpinKey(2, Parity::odd), 2, {1, 1})) == -8);
    CHECK(dimension_chi(InvariantKey::f0_relative2(3, ones_partition(3), ones_partition(3))) == 6);
}
