// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace kfactor {

SimpleGraph::SimpleGraph(int n)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), degree_(static_cast<std::size_t>(n), 0) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void SimpleGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        return false;
    }
    rows_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++degree_[u];
    ++degree_[v];
    ++edges_;
    return true;
}

bool SimpleGraph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) {
        return false;
    }
    rows_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    rows_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --degree_[u];
    --degree_[v];
    --edges_;
    return true;
}

std::vector<int> SimpleGraph::degree_sequence() const {
    std::vector<int> out = degree_;
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(degree_[v]));
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits != 0) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (v > u) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

SimpleGraph from_edges(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (const Edge& e : edges) {
        if (!g.add_edge(e.first, e.second)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
        }
    }
    return g;
}

}  // namespace kfactor
