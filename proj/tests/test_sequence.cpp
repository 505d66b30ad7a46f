// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "kfactor/error.hpp"
#include "kfactor/sequence.hpp"
#include "oracle.hpp"

using namespace kfactor;

namespace {

DegreeSequence seq(std::vector<int> d) {
    return DegreeSequence(std::move(d));
}

const std::vector<int> kFamily16 = {15, 15, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 2, 2};

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected kfactor::Error");
    return ErrorCode::InvalidSequence;
}

}  // namespace

TEST_SUITE("seqcore") {

TEST_CASE("DegreeSequence validates order, sign and emptiness") {
    CHECK_NOTHROW(seq({3, 3, 0}));
    CHECK(code_of([] { seq({1, 2}); }) == ErrorCode::InvalidSequence);
    CHECK(code_of([] { seq({}); }) == ErrorCode::InvalidSequence);
    CHECK(code_of([] { seq({1, -1}); }) == ErrorCode::InvalidSequence);
    CHECK(code_of([] { DegreeSequence::positive({2, 0}); }) == ErrorCode::InvalidSequence);
    CHECK(DegreeSequence::sorted({1, 3, 2}).values() == std::vector<int>{3, 2, 1});
}

TEST_CASE("is_graphic_eg on the documented examples") {
    CHECK(is_graphic_eg(seq({3, 3, 2, 2, 2, 2})));
    CHECK_FALSE(is_graphic_eg(seq({1, 1, 1})));
    CHECK_FALSE(is_graphic_eg(seq({3, 3, 3, 1})));
    CHECK(is_graphic_eg(seq({0})));
    CHECK(is_graphic_eg(seq({1, 1, 0, 0, 0, 0})));
}

TEST_CASE("(3,3,3,1) has no realization by enumeration") {
    const auto realizable = oracle::realizable_sequences(4);
    CHECK(realizable.count({3, 3, 3, 1}) == 0);
    CHECK(realizable.count({3, 3, 2, 2}) == 1);
}

TEST_CASE("is_graphic_eg matches exhaustive enumeration for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto realizable = oracle::realizable_sequences(n);
        int mismatches = 0;
        oracle::for_each_nonincreasing(n, [&](const std::vector<int>& d) {
            if (is_graphic_eg(seq(d)) != (realizable.count(d) == 1)) {
                ++mismatches;
            }
        });
        CHECK_MESSAGE(mismatches == 0, "n=" << n);
    }
}

TEST_CASE("unsorted span overload agrees with the sorted form") {
    const std::vector<int> d = {2, 3, 2, 3, 2, 2};
    CHECK(is_graphic_eg(std::span<const int>(d)));
    const std::vector<int> neg = {2, -1, 1};
    CHECK_FALSE(is_graphic_eg(std::span<const int>(neg)));
}

TEST_CASE("KabParams threshold is exact") {
    const KabParams p(10, 3);
    CHECK(p.threshold() == Rational(196, 12));
    CHECK(KabParams(6, 5).threshold() == Rational(144, 20));
    CHECK(code_of([] { KabParams(2, 3); }) == ErrorCode::InvalidKab);
    CHECK(code_of([] { KabParams(2, 0); }) == ErrorCode::InvalidKab);
}

TEST_CASE("in_kab examples") {
    CHECK(in_kab(seq({10, 10, 10, 10, 9, 9, 9, 9, 8, 8, 8, 8, 7, 7, 7, 7, 6, 4}), KabParams(10, 3)));
    CHECK_FALSE(in_kab(seq({2, 2}), KabParams(2, 2)));
    CHECK(in_kab(seq({6, 6, 6, 6, 5, 5, 5, 5}), KabParams(6, 5)));
    // odd sum, out of bounds
    CHECK_FALSE(in_kab(seq({6, 6, 6, 6, 5, 5, 5, 4}), KabParams(6, 5)));
    CHECK_FALSE(in_kab(seq({7, 6, 6, 6, 5, 5, 5, 5}), KabParams(6, 5)));
}

TEST_CASE("in_kab boundary: integer threshold admits n = l") {
    // (2+1+1)^2 / 4 = 4 exactly
    const KabParams p(2, 1);
    CHECK(p.threshold() == Rational(4));
    CHECK(in_kab(seq({2, 2, 1, 1}), p));
    CHECK_FALSE(in_kab(seq({2, 1, 1}), p));
}

TEST_CASE("zz_min_length") {
    CHECK(zz_min_length(KabParams(10, 3), false) == 17);
    CHECK(zz_min_length(KabParams(6, 5), true) == 8);
    CHECK(zz_min_length(KabParams(1, 1), false) == oracle::least_length_above_threshold(1, 1));
    CHECK(zz_min_length(KabParams(1, 1), false) == 3);
    CHECK(zz_min_length(KabParams(2, 1), false) == 5);  // strictly above l = 4
    CHECK(code_of([] { zz_min_length(KabParams(9, 3), true); }) == ErrorCode::ConnectedBoundUnavailable);
    CHECK(code_of([] { zz_min_length(KabParams(7, 5), true); }) == ErrorCode::ConnectedBoundUnavailable);
    // a = b: 4/(2) = 2 never binds
    CHECK(zz_min_length(KabParams(5, 5), true) == 7);
}

TEST_CASE("zz_min_length agrees with the integer-search oracle") {
    for (int b = 1; b <= 30; ++b) {
        for (int a = b; a <= b + 40; ++a) {
            const int expected = oracle::least_length_above_threshold(a, b);
            REQUIRE(zz_min_length(KabParams(a, b), false) == expected);
            if (a - b < 2) {
                int connected = expected;
                const int denom = 2 + b - a;
                while (connected * denom <= 4) {
                    ++connected;
                }
                REQUIRE(zz_min_length(KabParams(a, b), true) == std::max(expected, connected));
            }
        }
    }
}

TEST_CASE("rao_connected_predicate examples") {
    CHECK(rao_connected_predicate(seq({3, 3, 2, 2, 2, 2})).holds);
    const auto fam = rao_connected_predicate(seq(kFamily16));
    CHECK_FALSE(fam.holds);
    CHECK(fam.witness == 2);
    const auto ten = rao_connected_predicate(seq({9, 9, 9, 6, 6, 6, 6, 3, 3, 3}));
    CHECK_FALSE(ten.holds);
    CHECK(ten.witness == 3);
    CHECK(rao_connected_predicate(seq({1, 1})).holds);  // no s with s < 1
}

TEST_CASE("rao witness is the minimum violating s") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(2, 14);
    int failures = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = len(rng);
        std::uniform_int_distribution<int> val(0, n - 1);
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int& v : d) {
            v = val(rng);
        }
        std::sort(d.begin(), d.end(), std::greater<>());
        const auto r = rao_connected_predicate(seq(d));
        const int first = oracle::rao_first_violation(d);
        REQUIRE(r.holds == (first == 0));
        if (!r.holds) {
            ++failures;
            REQUIRE(*r.witness == first);
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("subtract_k") {
    CHECK(subtract_k(seq({3, 3, 2, 2, 2, 2}), 2).values() == std::vector<int>{1, 1, 0, 0, 0, 0});
    CHECK(subtract_k(seq(kFamily16), 2).values() ==
          std::vector<int>{13, 13, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 0, 0});
    CHECK(code_of([] { subtract_k(seq({5, 5}), 6); }) == ErrorCode::KTooLarge);
}

TEST_CASE("subtract_k then adding k back is the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto d = oracle::random_kab_member(rng, 9, 2, 3, 20);
        const int k = static_cast<int>(rng() % 3);
        auto back = subtract_k(seq(d), k).values();
        for (int& v : back) {
            v += k;
        }
        REQUIRE(back == d);
    }
}

TEST_CASE("is_k_factorable") {
    CHECK(is_k_factorable(seq({3, 3, 2, 2, 2, 2}), 2));
    CHECK_FALSE(is_k_factorable(seq({3, 3, 2, 2, 2, 2}), 3));
    CHECK_FALSE(is_k_factorable(seq({2, 2, 2, 1, 1}), 2));
    CHECK(is_k_factorable(seq(kFamily16), 2));
    CHECK_FALSE(is_k_factorable(seq({1, 1, 1}), 0));  // not graphic
}

TEST_CASE("K(a,b) members above the threshold are graphic") {
    std::mt19937_64 rng(2024);
    for (auto [a, b] : {std::pair{10, 3}, std::pair{6, 5}, std::pair{4, 4}, std::pair{12, 1}}) {
        const KabParams p(a, b);
        const int lo = oracle::least_length_above_threshold(a, b) - 1;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto d = oracle::random_kab_member(rng, a, b, std::max(lo, 1), lo + 25);
            const DegreeSequence s = seq(d);
            if (in_kab(s, p)) {
                REQUIRE(is_graphic_eg(s));
            }
        }
    }
}

}  // TEST_SUITE
