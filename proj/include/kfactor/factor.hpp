// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "kfactor/graph.hpp"
#include "kfactor/sequence.hpp"

namespace kfactor {

/// Which of the two superposed realizations a switch rewires.
enum class SwitchTarget { A, B };

/// 2-switch in one graph: {u,v}, {x,y} are replaced by {v,x}, {u,y}.
struct SwitchStep {
    SwitchTarget target = SwitchTarget::B;
    Vertex u = 0;
    Vertex v = 0;
    Vertex x = 0;
    Vertex y = 0;
    /// y-candidates examined while searching for this step.
    std::int64_t scans = 0;
    /// Shared-edge count right after the step was applied (0 when not run in a loop).
    std::int64_t shared_after = 0;

    std::vector<Edge> removed() const { return {Edge(u, v), Edge(x, y)}; }
    std::vector<Edge> added() const { return {Edge(v, x), Edge(u, y)}; }

    /// The step that undoes this one.
    SwitchStep reversed() const;
};

struct FactorCounters {
    std::int64_t initial_shared_edges = 0;  ///< m
    std::int64_t switch_count = 0;
    std::int64_t candidate_scans = 0;       ///< y-candidates examined, summed over switches
    std::int64_t x_scans = 0;               ///< x-candidates examined, summed over switches
    std::int64_t shared_edge_scan_words = 0;  ///< adjacency words ANDed to find the initial overlap
};

struct FactorComputation {
    DegreeSequence sequence;
    int k = 0;
    SimpleGraph initial_a;  ///< first realization of d - k
    SimpleGraph initial_b;  ///< first realization of n - 1 - d
    SimpleGraph graph_a;    ///< d - k after switching
    SimpleGraph graph_b;    ///< n - 1 - d after switching
    std::vector<SwitchStep> trace;
    SimpleGraph factor;     ///< complement(B) minus A
    FactorCounters counters;
};

/// Number of graphs among {a, b} containing {u, v}.
int multiplicity(const SimpleGraph& a, const SimpleGraph& b, Vertex u, Vertex v);

/// Edges present in both graphs, ascending. Throws VertexCountMismatch.
std::vector<Edge> shared_edges(const SimpleGraph& a, const SimpleGraph& b);

/// Finds a switch removing one copy of the multiedge {u, v}. x is the lowest
/// vertex not adjacent to v in either graph; y is the lowest vertex with
/// mult(x, y) > mult(u, y). B is tried before A. Any such choice lowers the
/// number of shared edges. `counters`, if given, accumulates the x- and
/// y-candidates examined.
SwitchStep find_switch(const SimpleGraph& a, const SimpleGraph& b, Vertex u, Vertex v,
                       FactorCounters* counters = nullptr);

/// In-place switch; throws InvalidSwitch if removed edges are missing, added
/// edges already present, or the four vertices are not distinct.
void apply_switch(SimpleGraph& h, const SwitchStep& step);

/// Value-returning form of apply_switch.
SimpleGraph switched(const SimpleGraph& h, const SwitchStep& step);

/// Realizes d - k as A and n - 1 - d as B, switches until A and B share no
/// edge, and returns complement(B) minus A, a k-factor of complement(B).
/// Multiedges are processed smallest pair first, oriented with u as the larger
/// endpoint. Throws NotFactorable, or SwitchNotFound on an internal failure.
FactorComputation compute_k_factor(const DegreeSequence& seq, int k);

}  // namespace kfactor
