#include "spingw/keys.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spingw;

TEST_CASE("spin keys reject the nonexistent genus-zero odd curve") {
    CHECK_NOTHROW(SpinKey(0, Parity::even));
    CHECK_THROWS_AS(SpinKey(0, Parity::odd), std::invalid_argument);
    CHECK_THROWS_AS(SpinKey(-1, Parity::even), std::invalid_argument);
    CHECK(parity_add(Parity::odd, Parity::odd) == Parity::even);
    CHECK(parity_sign(Parity::odd) == Rational(-1));
    CHECK(parse_parity("+") == Parity::even);
    CHECK(parse_parity("-") == Parity::odd);
    CHECK_THROWS_AS(parse_parity("0"), std::invalid_argument);
}

TEST_CASE("canonical serialization") {
    SpinKey s(3, Parity::odd);
    CHECK(InvariantKey::absolute(s, 2).canonical() == "GT|loc|h=3|p=-|d=2");
    CHECK(InvariantKey::absolute(s, 2, {2, 0, 1}).canonical() == "GT|loc|h=3|p=-|d=2|ins=tau:0,1,2");
    CHECK(InvariantKey::loc_relative(SpinKey(0, Parity::even), 2, Partition({2})).canonical() ==
          "GT|loc|h=0|p=+|d=2|m1=(2)");
    // loc contact pairs are symmetric and stored sorted
    CHECK(InvariantKey::loc_relative2(s, 2, Partition({2}), Partition({1, 1})).canonical() ==
          "GT|loc|h=3|p=-|d=2|m1=(1,1)|m2=(2)");
    // F0 pairs are constrained differently on the two sides; order is kept
    CHECK(InvariantKey::f0_relative2(2, Partition({2}), Partition({1, 1})).canonical() ==
          "GT|F0|d=2|m1=(2)|m2=(1,1)");
    CHECK(InvariantKey::f0_relative2(2, Partition({2}), Partition({1, 1}), {1}).canonical() ==
          "GT|F0|d=2|m1=(2)|m2=(1,1)|ins=phi:1");
}

TEST_CASE("contact partitions must match the degree") {
    CHECK_THROWS_AS(InvariantKey::loc_relative(SpinKey(1, Parity::even), 3, Partition({2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(InvariantKey::f0_relative2(2, Partition({2}), Partition({3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(InvariantKey::absolute(SpinKey(1, Parity::even), 0), std::invalid_argument);
    CHECK_THROWS_AS(InvariantKey::absolute(SpinKey(1, Parity::even), 1, {-1}),
                    std::invalid_argument);
}

TEST_CASE("parse inverts canonical serialization") {
    const char* keys[] = {
        "GT|loc|h=0|p=+|d=2|m1=(2)",
        "GT|loc|h=16|p=-|d=1",
        "GT|loc|h=2|p=+|d=2|m1=(1,1)|m2=(2)|ins=phi:0,3",
        "GT|F0|d=3|m1=(1,1,1)",
        "GT|F0|d=2|m1=(2)|m2=(1,1)|ins=phi:1",
        "GT|loc|h=7|p=-|d=2|ins=tau:0,0,5",
    };
    for (const char* k : keys)
        CHECK(InvariantKey::parse(k).canonical() == k);

    for (const char* bad : {
             "GT|loc|d=2",                      // missing spin data
             "GT|F0|h=1|p=+|d=2|m1=(1,1)",      // spin data on the wrong surface
             "GT|F0|d=2",                       // F0 needs contact data
             "GW|loc|h=1|p=+|d=2",              // wrong tag
             "GT|loc|h=1|p=+|d=2|m2=(2)",       // m2 without m1
             "GT|loc|h=0|p=-|d=2",              // invalid spin curve
             "GT|loc|h=1|p=+|d=2|m1=(1)",       // degree mismatch
             "GT|loc|h=1|p=+|d=2|ins=psi:1",    // unknown insertion kind
             "GT|loc|h=1|p=+|d=2|junk",         // trailing garbage
         })
        CHECK_THROWS_AS(InvariantKey::parse(bad), std::invalid_argument);
}

TEST_CASE("equality goes through the canonical form") {
    SpinKey s(2, Parity::even);
    CHECK(InvariantKey::loc_relative2(s, 2, Partition({2}), Partition({1, 1})) ==
          InvariantKey::loc_relative2(s, 2, Partition({1, 1}), Partition({2})));
    CHECK(InvariantKey::absolute(s, 1, {1, 0}) == InvariantKey::absolute(s, 1, {0, 1}));
}

TEST_CASE("pretty rendering") {
    CHECK(InvariantKey::loc_relative(SpinKey(0, Parity::even), 2, Partition({2})).pretty() ==
          "GT_(2)^{loc,0,+}");
    CHECK(InvariantKey::absolute(SpinKey(3, Parity::odd), 2).pretty() == "GT_2^{loc,3,-}");
    CHECK(InvariantKey::absolute(SpinKey(7, Parity::even), 1, {0}).pretty() ==
          "GT_1^{loc,7,+}(tau_0)");
    CHECK(InvariantKey::f0_relative2(2, Partition({2}), Partition({1, 1})).pretty() ==
          "GT_(2),(1,1)^{F0}");
}
