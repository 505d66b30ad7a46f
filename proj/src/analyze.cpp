// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/analyze.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "kfactor/error.hpp"

namespace kfactor {

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) {
            continue;
        }
        std::vector<Vertex> comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

FactorReport report(const DegreeSequence& d, int k, const FactorComputation& fc) {
    if (!(fc.sequence == d) || fc.k != k) {
        fail(ErrorCode::InvalidParams, "factor computation was produced for a different (d, k)");
    }
    FactorReport r{d, k, rao_connected_predicate(d), components(fc.factor), false};
    r.factor_connected = r.factor_components.size() == 1;
    if (r.factor_connected && !r.rao.holds) {
        std::ostringstream os;
        os << "connected " << k << "-factor computed for a sequence failing the connected-factor "
           << "inequalities at s=" << *r.rao.witness << "; sequence:";
        for (int v : d) {
            os << ' ' << v;
        }
        os << "; factor edges:";
        for (const Edge& e : fc.factor.edges()) {
            os << ' ' << e.first << '-' << e.second;
        }
        fail(ErrorCode::InconsistentReport, os.str());
    }
    return r;
}

}  // namespace kfactor
