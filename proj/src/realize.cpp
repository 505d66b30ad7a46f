// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/realize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kfactor/error.hpp"

namespace kfactor {

SimpleGraph realize_degrees(std::span<const int> degrees) {
    if (!is_graphic_eg(degrees)) {
        fail(ErrorCode::NotGraphic, "degree sequence is not graphic");
    }
    const int n = static_cast<int>(degrees.size());
    SimpleGraph g(n);
    std::vector<int> remaining(degrees.begin(), degrees.end());
    const int max_degree = n == 0 ? 0 : *std::max_element(remaining.begin(), remaining.end());
    std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(max_degree) + 1);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));

    for (;;) {
        // Bucket sort active vertices by (remaining desc, index asc).
        for (auto& bucket : buckets) {
            bucket.clear();
        }
        for (Vertex v = 0; v < n; ++v) {
            if (remaining[v] > 0) {
                buckets[static_cast<std::size_t>(remaining[v])].push_back(v);
            }
        }
        order.clear();
        for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
            order.insert(order.end(), it->begin(), it->end());
        }
        if (order.empty()) {
            break;
        }
        const Vertex hub = order.front();
        const int demand = remaining[hub];
        if (demand > static_cast<int>(order.size()) - 1) {
            throw std::logic_error("Havel-Hakimi ran out of partners on a graphic sequence");
        }
        for (int i = 1; i <= demand; ++i) {
            const Vertex w = order[static_cast<std::size_t>(i)];
            g.add_edge(hub, w);
            --remaining[w];
        }
        remaining[hub] = 0;
    }
    return g;
}

SimpleGraph realize(const DegreeSequence& seq) {
    return realize_degrees(seq.degrees());
}

SimpleGraph circulant_regular(int n, int r) {
    if (n < 1 || r < 0 || r > n - 1 || (static_cast<long long>(n) * r) % 2 != 0) {
        fail(ErrorCode::InfeasibleRegular,
             "no " + std::to_string(r) + "-regular graph on " + std::to_string(n) + " vertices");
    }
    SimpleGraph g(n);
    for (Vertex i = 0; i < n; ++i) {
        for (int j = 1; j <= r / 2; ++j) {
            g.add_edge(i, (i + j) % n);
        }
        if (r % 2 == 1) {
            g.add_edge(i, (i + n / 2) % n);
        }
    }
    return g;
}

namespace {

// Copies `block` onto vertices offset..offset+block.n-1 of `g`.
void embed(SimpleGraph& g, const SimpleGraph& block, int offset) {
    for (const Edge& e : block.edges()) {
        g.add_edge(e.first + offset, e.second + offset);
    }
}

void expect_degrees(const SimpleGraph& g, const DegreeSequence& expected, const char* what) {
    if (g.degree_sequence() != expected.values()) {
        throw std::logic_error(std::string(what) + " does not realize its target sequence");
    }
}

}  // namespace

SimpleGraph realize_family(const FamilyParams& fp, FamilyRule rule) {
    const DegreeSequence target = family_sequence(fp, rule);
    const int n = fp.n;
    const int s = fp.k;
    SimpleGraph g(n);
    for (Vertex u = 0; u < s; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    embed(g, circulant_regular(n - 2 * s, fp.x - s), s);
    expect_degrees(g, target, "family realization");
    return g;
}

SimpleGraph realize_family_minus_k(const FamilyParams& fp, FamilyRule rule) {
    const DegreeSequence target = subtract_k(family_sequence(fp, rule), fp.k);
    const int n = fp.n;
    const int k = fp.k;
    SimpleGraph g(n);
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < n - k; ++v) {
            g.add_edge(u, v);
        }
    }
    embed(g, circulant_regular(n - 2 * k, fp.x - 2 * k), k);
    expect_degrees(g, target, "family d-k realization");
    return g;
}

PackingDemo packing_demo_realize(int num_threes, int num_twos) {
    const DegreeSequence target = packing_demo_sequence(num_threes, num_twos);
    const int n = num_threes + num_twos;

    // Hamiltonian cycle through an order in which the matched pairs
    // (2i, 2i+1) are never consecutive; the matching then packs with it.
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    if (num_threes >= 4) {
        for (Vertex v = 0; v < num_threes; v += 2) order.push_back(v);
        for (Vertex v = 1; v < num_threes; v += 2) order.push_back(v);
        for (Vertex v = num_threes; v < n; ++v) order.push_back(v);
    } else {
        order = {0, 2, 1};
        for (Vertex v = 3; v < n; ++v) order.push_back(v);
    }
    SimpleGraph cycle(n);
    for (int i = 0; i < n; ++i) {
        cycle.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]);
    }
    SimpleGraph matching(n);
    for (Vertex v = 0; v < num_threes; v += 2) {
        if (cycle.has_edge(v, v + 1)) {
            fail(ErrorCode::PackingFailed, "matching edge " + std::to_string(v) + "-" +
                                               std::to_string(v + 1) + " lies on the cycle");
        }
        matching.add_edge(v, v + 1);
    }
    SimpleGraph both = cycle;
    embed(both, matching, 0);
    expect_degrees(both, target, "packing union");
    return {std::move(cycle), std::move(matching)};
}

}  // namespace kfactor
