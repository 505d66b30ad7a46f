// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "kfactor/analyze.hpp"
#include "kfactor/error.hpp"
#include "kfactor/realize.hpp"
#include "oracle.hpp"

using namespace kfactor;

namespace {

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

std::vector<Edge> E(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    for (auto [u, v] : pairs) {
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

TEST_SUITE("realize") {

TEST_CASE("SimpleGraph basics") {
    SimpleGraph g(70);
    CHECK(g.add_edge(0, 69));
    CHECK_FALSE(g.add_edge(69, 0));
    CHECK(g.has_edge(69, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS(g.add_edge(3, 3));
    CHECK_THROWS(g.add_edge(0, 70));
    CHECK(g.remove_edge(0, 69));
    CHECK_FALSE(g.remove_edge(0, 69));
    CHECK(g.edge_count() == 0);
    CHECK_THROWS(from_edges(3, E({{0, 1}, {1, 0}})));
}

TEST_CASE("realize small examples") {
    CHECK(realize(DegreeSequence({2, 2, 2})).edges() == E({{0, 1}, {0, 2}, {1, 2}}));
    const SimpleGraph m = realize(DegreeSequence({1, 1, 1, 1}));
    CHECK(m.edge_count() == 2);
    CHECK(m.degree_sequence() == std::vector<int>{1, 1, 1, 1});
    const SimpleGraph six = realize(DegreeSequence({3, 3, 2, 2, 2, 2}));
    CHECK(six.degrees() == std::vector<int>{3, 3, 2, 2, 2, 2});
    CHECK(code_of([] { realize(DegreeSequence({3, 3, 3, 1})); }) == ErrorCode::NotGraphic);
}

TEST_CASE("realize_degrees keeps per-vertex labels for unsorted input") {
    const std::vector<int> d = {1, 3, 2, 2, 3, 1};
    const SimpleGraph g = realize_degrees(d);
    CHECK(g.degrees() == d);
}

TEST_CASE("realize reproduces every graphic sequence up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        oracle::for_each_nonincreasing(n, [&](const std::vector<int>& d) {
            if (!is_graphic_eg(DegreeSequence(d))) {
                return;
            }
            const SimpleGraph g = realize(DegreeSequence(d));
            REQUIRE(g.degrees() == d);
            REQUIRE(realize(DegreeSequence(d)) == g);
        });
    }
}

TEST_CASE("realize on random shuffled degree vectors") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = oracle::random_kab_member(rng, 12, 2, 40, 80);
        std::shuffle(d.begin(), d.end(), rng);
        REQUIRE(realize_degrees(d).degrees() == d);
    }
}

TEST_CASE("circulant_regular") {
    const SimpleGraph c6 = circulant_regular(6, 2);
    CHECK(c6.edges() == E({{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    const SimpleGraph k5 = circulant_regular(5, 4);
    CHECK(k5.edge_count() == 10);
    CHECK(code_of([] { circulant_regular(5, 3); }) == ErrorCode::InfeasibleRegular);
    CHECK(code_of([] { circulant_regular(4, 4); }) == ErrorCode::InfeasibleRegular);
    for (int n = 1; n <= 24; ++n) {
        for (int r = 0; r < n; ++r) {
            if ((n * r) % 2 != 0) continue;
            const SimpleGraph g = circulant_regular(n, r);
            for (Vertex v = 0; v < n; ++v) {
                REQUIRE(g.degree(v) == r);
            }
            if (r >= 2) {
                std::vector<std::pair<int, int>> edges;
                for (const Edge& e : g.edges()) edges.emplace_back(e.first, e.second);
                REQUIRE(oracle::component_count(n, edges) == 1);
            }
        }
    }
}

TEST_CASE("realize_family n=16 s=2 x=6") {
    const FamilyParams fp{16, 2, 6};
    const SimpleGraph g = realize_family(fp);
    CHECK(g.degree_sequence() == family_sequence(fp).values());
    CHECK(g.degree(0) == 15);
    CHECK(g.degree(1) == 15);
    CHECK(g.degree(14) == 2);
    CHECK(g.degree(15) == 2);
    // Dropping the universal and suffix vertices leaves a 4-regular graph on 12.
    for (Vertex v = 2; v < 14; ++v) {
        int inner = 0;
        for (Vertex w : g.neighbors(v)) {
            inner += (w >= 2 && w < 14) ? 1 : 0;
        }
        CHECK(inner == 4);
    }
}

TEST_CASE("realize_family n=8 s=2 x=4 has a 4-cycle middle") {
    const SimpleGraph g = realize_family({8, 2, 4});
    CHECK(g.degree_sequence() == std::vector<int>{7, 7, 4, 4, 4, 4, 2, 2});
    for (Vertex v = 2; v < 6; ++v) {
        int inner = 0;
        for (Vertex w : g.neighbors(v)) inner += (w >= 2 && w < 6) ? 1 : 0;
        CHECK(inner == 2);
    }
}

TEST_CASE("realize_family_minus_k") {
    const SimpleGraph g = realize_family_minus_k({16, 2, 6});
    CHECK(g.vertex_count() == 16);
    CHECK(g.degree_sequence() ==
          std::vector<int>{13, 13, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 0, 0});
    CHECK(g.degree(14) == 0);
    CHECK(g.degree(15) == 0);
    const SimpleGraph eight = realize_family_minus_k({8, 2, 4});
    CHECK(eight.degree_sequence() == subtract_k(family_sequence({8, 2, 4}), 2).values());
    CHECK(eight.degree_sequence() == std::vector<int>{5, 5, 2, 2, 2, 2, 0, 0});
    CHECK(code_of([] { realize_family_minus_k({10, 5, 6}); }) == ErrorCode::InvalidFamilyParams);
}

TEST_CASE("family and family-minus-k differ by exactly k at every vertex") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 3 * k + 1; n <= 30; ++n) {
            for (int x = 2 * k; x <= n - k - 1; ++x) {
                const FamilyParams fp{n, k, x};
                try {
                    validate_family(fp);
                } catch (const Error&) {
                    continue;
                }
                const SimpleGraph full = realize_family(fp);
                const SimpleGraph reduced = realize_family_minus_k(fp);
                for (Vertex v = 0; v < n; ++v) {
                    REQUIRE(full.degree(v) - reduced.degree(v) == k);
                }
            }
        }
    }
}

TEST_CASE("packing_demo_realize") {
    const PackingDemo six = packing_demo_realize(2, 4);
    SimpleGraph both = six.cycle_factor;
    for (const Edge& e : six.matching.edges()) {
        CHECK_FALSE(six.cycle_factor.has_edge(e.first, e.second));
        both.add_edge(e.first, e.second);
    }
    CHECK(both.degree_sequence() == std::vector<int>{3, 3, 2, 2, 2, 2});
    for (Vertex v = 0; v < 6; ++v) CHECK(six.cycle_factor.degree(v) == 2);
    CHECK(components(six.cycle_factor).size() == 1);

    const PackingDemo four = packing_demo_realize(4, 0);
    CHECK(four.cycle_factor.edge_count() + four.matching.edge_count() == 6);  // K4

    CHECK(code_of([] { packing_demo_realize(2, 0); }) == ErrorCode::InvalidPackingParams);
    CHECK(code_of([] { packing_demo_realize(2, 1); }) == ErrorCode::InvalidPackingParams);

    for (int threes = 2; threes <= 12; threes += 2) {
        for (int twos = 0; twos <= 8; ++twos) {
            if (threes + twos < 4) continue;
            const PackingDemo p = packing_demo_realize(threes, twos);
            for (Vertex v = 0; v < threes + twos; ++v) {
                REQUIRE(p.cycle_factor.degree(v) == 2);
                REQUIRE(p.matching.degree(v) == (v < threes ? 1 : 0));
            }
            REQUIRE(components(p.cycle_factor).size() == 1);
            for (const Edge& e : p.matching.edges()) REQUIRE_FALSE(p.cycle_factor.has_edge(e.first, e.second));
        }
    }
}

}  // TEST_SUITE
