// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent re-verification of a FactorComputation, shared by the unit and
// acceptance suites. Uses only has_edge/degree queries, never the library's
// switching or overlap code.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kfactor/factor.hpp"
#include "kfactor/sequence.hpp"

namespace checks {

inline long long count_shared(const kfactor::SimpleGraph& a, const kfactor::SimpleGraph& b) {
    long long shared = 0;
    for (int u = 0; u < a.vertex_count(); ++u) {
        for (int v = u + 1; v < a.vertex_count(); ++v) {
            shared += (a.has_edge(u, v) && b.has_edge(u, v)) ? 1 : 0;
        }
    }
    return shared;
}

/// Empty string when every invariant holds, otherwise a description.
inline std::string verify(const kfactor::FactorComputation& fc) {
    using kfactor::SwitchTarget;
    std::ostringstream why;
    const int n = static_cast<int>(fc.sequence.size());
    const int k = fc.k;

    kfactor::SimpleGraph a = fc.initial_a;
    kfactor::SimpleGraph b = fc.initial_b;
    for (int v = 0; v < n; ++v) {
        if (a.degree(v) != fc.sequence[v] - k) why << "A degree wrong at " << v << "; ";
        if (b.degree(v) != n - 1 - fc.sequence[v]) why << "B degree wrong at " << v << "; ";
    }
    long long shared = count_shared(a, b);
    if (shared != fc.counters.initial_shared_edges) why << "initial m mismatch; ";

    for (const auto& step : fc.trace) {
        kfactor::SimpleGraph& h = step.target == SwitchTarget::A ? a : b;
        const bool legal = h.has_edge(step.u, step.v) && h.has_edge(step.x, step.y) &&
                           !h.has_edge(step.v, step.x) && !h.has_edge(step.u, step.y);
        if (!legal) {
            why << "illegal step; ";
            return why.str();
        }
        h.remove_edge(step.u, step.v);
        h.remove_edge(step.x, step.y);
        h.add_edge(step.v, step.x);
        h.add_edge(step.u, step.y);
        const long long next = count_shared(a, b);
        if (next >= shared) why << "no progress at a step; ";
        if (next != step.shared_after) why << "shared_after mismatch; ";
        if (step.scans > n) why << "more than n candidate scans in one step; ";
        shared = next;
    }
    if (shared != 0) why << "shared edges remain; ";
    if (!(a == fc.graph_a) || !(b == fc.graph_b)) why << "replayed graphs differ; ";
    for (int v = 0; v < n; ++v) {
        if (fc.graph_a.degree(v) != fc.sequence[v] - k) why << "final A degree changed; ";
        if (fc.graph_b.degree(v) != n - 1 - fc.sequence[v]) why << "final B degree changed; ";
        if (fc.factor.degree(v) != k) why << "factor not " << k << "-regular at " << v << "; ";
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool in_factor = fc.factor.has_edge(u, v);
            if (in_factor && fc.graph_a.has_edge(u, v)) why << "factor meets A; ";
            if (in_factor && fc.graph_b.has_edge(u, v)) why << "factor meets B; ";
        }
        if (fc.factor.degree(u) + fc.graph_a.degree(u) != fc.sequence[u]) why << "union misses d; ";
    }
    if (fc.counters.switch_count > fc.counters.initial_shared_edges) why << "more switches than m; ";
    if (static_cast<long long>(fc.trace.size()) != fc.counters.switch_count) why << "trace length; ";
    return why.str();
}

/// Random k-factorable sequence with n <= max_n and 1 <= k <= max_k.
inline std::pair<kfactor::DegreeSequence, int> random_factorable(std::mt19937_64& rng, int max_n, int max_k) {
    for (;;) {
        const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_k));
        if (k > n - 1) continue;
        std::uniform_int_distribution<int> val(k, n - 1);
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int& v : d) v = val(rng);
        std::sort(d.begin(), d.end(), std::greater<>());
        kfactor::DegreeSequence seq(d);
        if (kfactor::is_k_factorable(seq, k)) {
            return {seq, k};
        }
    }
}

}  // namespace checks
