// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/factor.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kfactor/error.hpp"
#include "kfactor/realize.hpp"

namespace kfactor {

SwitchStep SwitchStep::reversed() const {
    SwitchStep back = *this;
    back.u = v;
    back.v = x;
    back.x = y;
    back.y = u;
    return back;
}

int multiplicity(const SimpleGraph& a, const SimpleGraph& b, Vertex u, Vertex v) {
    return static_cast<int>(a.has_edge(u, v)) + static_cast<int>(b.has_edge(u, v));
}

namespace {

std::vector<Edge> shared_edges_counted(const SimpleGraph& a, const SimpleGraph& b, std::int64_t* words) {
    if (a.vertex_count() != b.vertex_count()) {
        fail(ErrorCode::VertexCountMismatch,
             "graphs have " + std::to_string(a.vertex_count()) + " and " +
                 std::to_string(b.vertex_count()) + " vertices");
    }
    std::vector<Edge> out;
    const int n = a.vertex_count();
    const std::size_t words_per_row = a.words_per_row();
    for (Vertex u = 0; u < n; ++u) {
        const std::uint64_t* ra = a.row(u);
        const std::uint64_t* rb = b.row(u);
        for (std::size_t w = 0; w < words_per_row; ++w) {
            std::uint64_t both = ra[w] & rb[w];
            while (both != 0) {
                const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(both)));
                if (v > u) {
                    out.emplace_back(u, v);
                }
                both &= both - 1;
            }
        }
        if (words != nullptr) {
            *words += static_cast<std::int64_t>(words_per_row);
        }
    }
    return out;
}

[[noreturn]] void switch_not_found(const SimpleGraph& a, const SimpleGraph& b, Vertex u, Vertex v,
                                   const std::string& reason) {
    std::ostringstream os;
    os << "no switch for multiedge {" << u << "," << v << "}: " << reason << "\n";
    for (Vertex w : {u, v}) {
        os << "  A[" << w << "] =";
        for (Vertex z : a.neighbors(w)) {
            os << ' ' << z;
        }
        os << "\n  B[" << w << "] =";
        for (Vertex z : b.neighbors(w)) {
            os << ' ' << z;
        }
        os << '\n';
    }
    fail(ErrorCode::SwitchNotFound, os.str());
}

}  // namespace

std::vector<Edge> shared_edges(const SimpleGraph& a, const SimpleGraph& b) {
    return shared_edges_counted(a, b, nullptr);
}

SwitchStep find_switch(const SimpleGraph& a, const SimpleGraph& b, Vertex u, Vertex v,
                       FactorCounters* counters) {
    if (a.vertex_count() != b.vertex_count()) {
        fail(ErrorCode::VertexCountMismatch, "graphs differ in vertex count");
    }
    if (multiplicity(a, b, u, v) != 2) {
        fail(ErrorCode::InvalidSwitch,
             "{" + std::to_string(u) + "," + std::to_string(v) + "} is not a multiedge");
    }
    const int n = a.vertex_count();
    std::int64_t x_scans = 0;
    std::int64_t y_scans = 0;

    Vertex x = -1;
    for (Vertex cand = 0; cand < n; ++cand) {
        ++x_scans;
        if (cand != u && cand != v && multiplicity(a, b, v, cand) == 0) {
            x = cand;
            break;
        }
    }
    if (x < 0) {
        switch_not_found(a, b, u, v, "every vertex is adjacent to v");
    }

    for (Vertex y = 0; y < n; ++y) {
        ++y_scans;
        if (y == u || y == v || y == x) {
            continue;
        }
        if (multiplicity(a, b, x, y) <= multiplicity(a, b, u, y)) {
            continue;
        }
        for (SwitchTarget target : {SwitchTarget::B, SwitchTarget::A}) {
            const SimpleGraph& h = target == SwitchTarget::B ? b : a;
            if (h.has_edge(x, y) && !h.has_edge(u, y)) {
                if (counters != nullptr) {
                    counters->x_scans += x_scans;
                    counters->candidate_scans += y_scans;
                }
                SwitchStep step;
                step.target = target;
                step.u = u;
                step.v = v;
                step.x = x;
                step.y = y;
                step.scans = y_scans;
                return step;
            }
        }
    }
    switch_not_found(a, b, u, v, "no y for x=" + std::to_string(x));
}

void apply_switch(SimpleGraph& h, const SwitchStep& step) {
    const Vertex u = step.u, v = step.v, x = step.x, y = step.y;
    const bool distinct = u != v && u != x && u != y && v != x && v != y && x != y;
    if (!distinct || !h.has_edge(u, v) || !h.has_edge(x, y) || h.has_edge(v, x) || h.has_edge(u, y)) {
        fail(ErrorCode::InvalidSwitch,
             "cannot switch {" + std::to_string(u) + "," + std::to_string(v) + "},{" + std::to_string(x) +
                 "," + std::to_string(y) + "}");
    }
    h.remove_edge(u, v);
    h.remove_edge(x, y);
    h.add_edge(v, x);
    h.add_edge(u, y);
}

SimpleGraph switched(const SimpleGraph& h, const SwitchStep& step) {
    SimpleGraph out = h;
    apply_switch(out, step);
    return out;
}

FactorComputation compute_k_factor(const DegreeSequence& seq, int k) {
    if (!is_k_factorable(seq, k)) {
        fail(ErrorCode::NotFactorable, "sequence is not " + std::to_string(k) + "-factorable");
    }
    const int n = static_cast<int>(seq.size());
    std::vector<int> complement_degrees(seq.begin(), seq.end());
    for (int& d : complement_degrees) {
        d = n - 1 - d;
    }
    if (!is_graphic_eg(complement_degrees)) {
        throw std::logic_error("n - 1 - d is not graphic although d is");
    }

    FactorComputation fc{seq, k, {}, {}, {}, {}, {}, {}, {}};
    fc.graph_a = realize(subtract_k(seq, k));
    fc.graph_b = realize_degrees(complement_degrees);
    fc.initial_a = fc.graph_a;
    fc.initial_b = fc.graph_b;

    const auto initial = shared_edges_counted(fc.graph_a, fc.graph_b, &fc.counters.shared_edge_scan_words);
    std::set<Edge> multiedges(initial.begin(), initial.end());
    fc.counters.initial_shared_edges = static_cast<std::int64_t>(multiedges.size());

    while (!multiedges.empty()) {
        const Edge e = *multiedges.begin();
        const auto before = static_cast<std::int64_t>(multiedges.size());
        SwitchStep step = find_switch(fc.graph_a, fc.graph_b, e.second, e.first, &fc.counters);
        apply_switch(step.target == SwitchTarget::A ? fc.graph_a : fc.graph_b, step);
        for (const Edge& touched : {Edge(step.u, step.v), Edge(step.x, step.y), Edge(step.v, step.x),
                                    Edge(step.u, step.y)}) {
            if (multiplicity(fc.graph_a, fc.graph_b, touched.first, touched.second) == 2) {
                multiedges.insert(touched);
            } else {
                multiedges.erase(touched);
            }
        }
        step.shared_after = static_cast<std::int64_t>(multiedges.size());
        if (step.shared_after >= before) {
            throw std::logic_error("switch did not reduce the number of shared edges");
        }
        fc.trace.push_back(step);
        ++fc.counters.switch_count;
    }

    fc.factor = SimpleGraph(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!fc.graph_b.has_edge(u, v) && !fc.graph_a.has_edge(u, v)) {
                fc.factor.add_edge(u, v);
            }
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        if (fc.factor.degree(u) != k || fc.factor.degree(u) + fc.graph_a.degree(u) != seq[u]) {
            throw std::logic_error("factor invariant violated at vertex " + std::to_string(u));
        }
    }
    return fc;
}

}  // namespace kfactor
