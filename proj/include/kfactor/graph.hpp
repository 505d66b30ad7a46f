// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kfactor {

using Vertex = int;

/// Unordered vertex pair stored with first < second.
struct Edge {
    Vertex first = 0;
    Vertex second = 0;

    Edge() = default;
    Edge(Vertex u, Vertex v) : first(u < v ? u : v), second(u < v ? v : u) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple graph on vertices 0..n-1 backed by a bit adjacency matrix,
/// so edge queries and toggles are O(1).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return edges_; }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        return u != v && ((rows_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U) != 0;
    }

    /// Adds {u, v}; returns false if it already existed. Self-loops are rejected.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const { return degree_[v]; }
    const std::vector<int>& degrees() const noexcept { return degree_; }

    /// Degrees sorted nonincreasing.
    std::vector<int> degree_sequence() const;

    std::vector<Vertex> neighbors(Vertex v) const;

    /// All edges in ascending lexicographic order.
    std::vector<Edge> edges() const;

    /// Row-major 64-bit words of the adjacency matrix row of `v`.
    const std::uint64_t* row(Vertex v) const noexcept { return rows_.data() + row_offset(v); }
    std::size_t words_per_row() const noexcept { return words_; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t row_offset(Vertex v) const noexcept { return static_cast<std::size_t>(v) * words_; }
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<int> degree_;
};

SimpleGraph from_edges(int n, const std::vector<Edge>& edges);

}  // namespace kfactor
