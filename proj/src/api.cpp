// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/api.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "kfactor/error.hpp"
#include "kfactor/generate.hpp"

namespace kfactor::api {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) {
            ++i;
        }
        if (i == text.size()) {
            break;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) {
            ++j;
        }
        const std::string_view token = text.substr(i, j - i);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw UsageError("not an integer: '" + std::string(token) + "'");
        }
        out.push_back(value);
        i = j;
    }
    if (out.empty()) {
        throw UsageError("empty integer list");
    }
    return out;
}

DegreeSequence to_sequence(const std::vector<int>& values) {
    return DegreeSequence::sorted(values);
}

json graph_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.first, e.second});
    }
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

std::string to_dot(const SimpleGraph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v << ";\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  " << e.first << " -- " << e.second << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

json edge_json(const Edge& e) {
    return json::array({e.first, e.second});
}

json rao_json(const RaoResult& r) {
    return {{"holds", r.holds}, {"witness_s", r.witness ? json(*r.witness) : json(nullptr)}};
}

json checks_json(const DegreeSequence& seq, int k) {
    const RaoResult rao = rao_connected_predicate(seq);
    return {{"graphic", is_graphic_eg(seq)},
            {"k_factorable", is_k_factorable(seq, k)},
            {"rao_connected", rao.holds},
            {"witness_s", rao.witness ? json(*rao.witness) : json(nullptr)}};
}

}  // namespace

json trace_json(const std::vector<SwitchStep>& trace) {
    json out = json::array();
    for (const SwitchStep& s : trace) {
        json removed = json::array();
        for (const Edge& e : s.removed()) {
            removed.push_back(edge_json(e));
        }
        json added = json::array();
        for (const Edge& e : s.added()) {
            added.push_back(edge_json(e));
        }
        out.push_back({{"graph", s.target == SwitchTarget::A ? "A" : "B"},
                       {"u", s.u},
                       {"v", s.v},
                       {"x", s.x},
                       {"y", s.y},
                       {"removed", std::move(removed)},
                       {"added", std::move(added)},
                       {"shared_after", s.shared_after}});
    }
    return out;
}

json report_json(const FactorReport& r) {
    return {{"sequence", r.sequence.values()},
            {"k", r.k},
            {"rao_verdict", r.rao.holds ? "connected_factorable" : "not_connected_factorable"},
            {"rao", rao_json(r.rao)},
            {"factor_components", r.factor_components},
            {"component_count", r.factor_components.size()},
            {"factor_connected", r.factor_connected}};
}

json check_payload(const DegreeSequence& seq, std::optional<int> k) {
    const RaoResult rao = rao_connected_predicate(seq);
    json out = {{"sequence", seq.values()},
                {"n", seq.size()},
                {"graphic", is_graphic_eg(seq)},
                {"rao_connected", rao.holds},
                {"witness_s", rao.witness ? json(*rao.witness) : json(nullptr)},
                {"k", k ? json(*k) : json(nullptr)},
                {"k_factorable", k ? json(is_k_factorable(seq, *k)) : json(nullptr)}};
    return out;
}

json generate_payload(const GenerateRequest& req) {
    json params;
    DegreeSequence seq({0});
    if (req.mode == "connected" || req.mode == "heuristic") {
        const GenerationParams p{req.a, req.b, req.k, req.seed, req.max_retries};
        seq = req.mode == "connected" ? generate_connected(p) : generate_heuristic(p);
        params = {{"a", req.a}, {"b", req.b}, {"k", req.k}, {"max_retries", req.max_retries}};
    } else if (req.mode == "disconnected") {
        seq = generate_disconnected(req.n, req.k, req.seed);
        params = {{"n", req.n}, {"k", req.k}, {"x", seq[static_cast<std::size_t>(req.k)]}};
    } else {
        throw UsageError("unknown mode '" + req.mode + "' (connected, heuristic, disconnected)");
    }
    return {{"mode", req.mode},
            {"seed", req.seed},
            {"prng", std::string(kPrngName)},
            {"params", std::move(params)},
            {"sequence", seq.values()},
            {"n", seq.size()},
            {"k", req.k},
            {"checks", checks_json(seq, req.k)}};
}

KFactorBundle kfactor_bundle(const DegreeSequence& seq, int k) {
    FactorComputation fc = compute_k_factor(seq, k);
    const FactorReport rep = report(seq, k, fc);

    const int n = fc.graph_b.vertex_count();
    SimpleGraph realization(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!fc.graph_b.has_edge(u, v)) {
                realization.add_edge(u, v);
            }
        }
    }
    json payload = {{"sequence", seq.values()},
                    {"k", k},
                    {"realization", graph_json(realization)},
                    {"d_minus_k_graph", graph_json(fc.graph_a)},
                    {"factor", graph_json(fc.factor)},
                    {"initial_d_minus_k_graph", graph_json(fc.initial_a)},
                    {"initial_complement_graph", graph_json(fc.initial_b)},
                    {"trace", trace_json(fc.trace)},
                    {"counters",
                     {{"initial_shared_edges", fc.counters.initial_shared_edges},
                      {"switch_count", fc.counters.switch_count},
                      {"candidate_scans", fc.counters.candidate_scans},
                      {"x_scans", fc.counters.x_scans}}},
                    {"report", report_json(rep)}};
    return {std::move(payload), std::move(fc), std::move(realization)};
}

}  // namespace kfactor::api
