// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "kfactor/api.hpp"
#include "kfactor/error.hpp"
#include "kfactor/generate.hpp"
#include "kfactor/realize.hpp"

namespace kfactor::cli {

namespace {

using api::json;

struct Options {
    std::string seq;
    std::optional<int> k;
    std::string mode;
    int a = 0;
    int b = 0;
    int n = 0;
    int x = 0;
    int threes = 0;
    int twos = 0;
    std::uint64_t seed = 0;
    int max_retries = 1000;
    bool minus_k = false;
    std::string format = "json";
    std::string out_path;
    std::string dot_dir;
};

class Emitter {
public:
    Emitter(std::ostream& out, const std::string& path) : out_(out), path_(path) {}

    void write(const std::string& text) {
        if (path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(path_);
        if (!file) {
            throw api::UsageError("cannot open output file " + path_);
        }
        file << text;
    }

private:
    std::ostream& out_;
    std::string path_;
};

std::string join(const std::vector<int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i == 0 ? "" : ",") + std::to_string(values[i]);
    }
    return s;
}

void write_dot_file(const std::filesystem::path& dir, const char* name, const SimpleGraph& g) {
    std::filesystem::create_directories(dir);
    std::ofstream file(dir / name);
    if (!file) {
        throw api::UsageError("cannot write " + (dir / name).string());
    }
    file << api::to_dot(g);
}

int emit_graph(const SimpleGraph& g, const Options& o, Emitter& emit) {
    if (o.format == "dot") {
        emit.write(api::to_dot(g));
    } else if (o.format == "text") {
        std::ostringstream os;
        os << "n=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
        for (const Edge& e : g.edges()) {
            os << e.first << ' ' << e.second << '\n';
        }
        emit.write(os.str());
    } else {
        emit.write(api::graph_json(g).dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_check(const Options& o, Emitter& emit) {
    const DegreeSequence seq = api::to_sequence(api::parse_int_list(o.seq));
    const json payload = api::check_payload(seq, o.k);
    if (o.format == "text") {
        std::ostringstream os;
        os << "sequence: " << join(seq.values()) << '\n'
           << "graphic: " << payload["graphic"] << '\n'
           << "rao_connected: " << payload["rao_connected"] << '\n';
        if (!payload["witness_s"].is_null()) {
            os << "witness_s: " << payload["witness_s"] << '\n';
        }
        if (o.k) {
            os << "k_factorable: " << payload["k_factorable"] << '\n';
        }
        emit.write(os.str());
    } else {
        emit.write(payload.dump(2) + "\n");
    }
    return payload["graphic"].get<bool>() ? kExitOk : kExitNegative;
}

int cmd_generate(const Options& o, Emitter& emit) {
    api::GenerateRequest req;
    req.mode = o.mode;
    req.a = o.a;
    req.b = o.b;
    req.k = o.k.value_or(2);
    req.n = o.n;
    req.seed = o.seed;
    req.max_retries = o.max_retries;
    const json payload = api::generate_payload(req);
    if (o.format == "text") {
        emit.write(join(payload["sequence"].get<std::vector<int>>()) + "\n");
    } else {
        emit.write(payload.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_kfactor(const Options& o, Emitter& emit) {
    if (!o.k) {
        throw api::UsageError("--k is required");
    }
    const DegreeSequence seq = api::to_sequence(api::parse_int_list(o.seq));
    const api::KFactorBundle bundle = api::kfactor_bundle(seq, *o.k);
    if (!o.dot_dir.empty()) {
        const std::filesystem::path dir(o.dot_dir);
        write_dot_file(dir, "realization.dot", bundle.realization);
        write_dot_file(dir, "d_minus_k.dot", bundle.computation.graph_a);
        write_dot_file(dir, "factor.dot", bundle.computation.factor);
    }
    if (o.format == "dot") {
        emit.write(api::to_dot(bundle.computation.factor));
    } else if (o.format == "text") {
        const json& rep = bundle.payload["report"];
        std::ostringstream os;
        os << "sequence: " << join(seq.values()) << "  k=" << *o.k << '\n'
           << "rao_verdict: " << rep["rao_verdict"].get<std::string>() << '\n'
           << "initial shared edges: " << bundle.computation.counters.initial_shared_edges << '\n'
           << "switches: " << bundle.computation.counters.switch_count << '\n'
           << "factor components: " << rep["component_count"] << '\n';
        for (const Edge& e : bundle.computation.factor.edges()) {
            os << e.first << ' ' << e.second << '\n';
        }
        emit.write(os.str());
    } else {
        emit.write(bundle.payload.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_realize(const Options& o, Emitter& emit) {
    const DegreeSequence seq = api::to_sequence(api::parse_int_list(o.seq));
    if (!is_graphic_eg(seq)) {
        emit.write(json{{"graphic", false}, {"sequence", seq.values()}}.dump(2) + "\n");
        return kExitNegative;
    }
    return emit_graph(realize(seq), o, emit);
}

int cmd_family(const Options& o, Emitter& emit) {
    const FamilyParams fp{o.n, o.k.value_or(2), o.x};
    return emit_graph(o.minus_k ? realize_family_minus_k(fp) : realize_family(fp), o, emit);
}

int cmd_packing(const Options& o, Emitter& emit) {
    const PackingDemo demo = packing_demo_realize(o.threes, o.twos);
    if (o.format == "json") {
        emit.write(json{{"sequence", packing_demo_sequence(o.threes, o.twos).values()},
                        {"two_factor", api::graph_json(demo.cycle_factor)},
                        {"matching", api::graph_json(demo.matching)}}
                       .dump(2) +
                   "\n");
        return kExitOk;
    }
    SimpleGraph both = demo.cycle_factor;
    for (const Edge& e : demo.matching.edges()) {
        both.add_edge(e.first, e.second);
    }
    return emit_graph(both, o, emit);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generate k-factorable degree sequences and compute k-factors", "kfactor"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    };

    auto* check = app.add_subcommand("check", "Graphicality, k-factorability and connected-factor checks");
    check->add_option("--seq", o.seq, "Degrees, comma or space separated")->required();
    check->add_option("--k", o.k, "Factor degree");
    add_common(check);

    auto* generate = app.add_subcommand("generate", "Generate a k-factorable sequence");
    generate->add_option("--mode", o.mode, "connected, heuristic or disconnected")
        ->required()
        ->check(CLI::IsMember({"connected", "heuristic", "disconnected"}));
    generate->add_option("--a", o.a, "Upper degree bound");
    generate->add_option("--b", o.b, "Lower degree bound");
    generate->add_option("--k", o.k, "Factor degree (default 2)");
    generate->add_option("--n", o.n, "Sequence length (disconnected mode)");
    generate->add_option("--seed", o.seed, "PRNG seed");
    generate->add_option("--max-retries", o.max_retries, "Draw limit");
    add_common(generate);

    auto* kfactor = app.add_subcommand("kfactor", "Compute a k-factor by superposition and edge switching");
    kfactor->add_option("--seq", o.seq, "Degrees, comma or space separated")->required();
    kfactor->add_option("--k", o.k, "Factor degree")->required();
    kfactor->add_option("--dot-dir", o.dot_dir, "Also write realization/d_minus_k/factor .dot files here");
    add_common(kfactor);

    auto* realize_cmd = app.add_subcommand("realize", "Havel-Hakimi realization of a graphic sequence");
    realize_cmd->add_option("--seq", o.seq, "Degrees, comma or space separated")->required();
    add_common(realize_cmd);

    auto* family = app.add_subcommand("family", "Realize (n-1)^s x^(n-2s) s^s or its d-k sequence");
    family->add_option("--n", o.n, "Sequence length")->required();
    family->add_option("--k", o.k, "s = k (default 2)");
    family->add_option("--x", o.x, "Middle degree")->required();
    family->add_flag("--minus-k", o.minus_k, "Realize d - k instead of d");
    add_common(family);

    auto* packing = app.add_subcommand("packing", "2-regular graph packed with a perfect matching");
    packing->add_option("--threes", o.threes, "Number of degree-3 vertices (even)")->required();
    packing->add_option("--twos", o.twos, "Number of degree-2 vertices")->required();
    add_common(packing);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    Emitter emit(out, o.out_path);
    try {
        if (check->parsed()) return cmd_check(o, emit);
        if (generate->parsed()) return cmd_generate(o, emit);
        if (kfactor->parsed()) return cmd_kfactor(o, emit);
        if (realize_cmd->parsed()) return cmd_realize(o, emit);
        if (family->parsed()) return cmd_family(o, emit);
        if (packing->parsed()) return cmd_packing(o, emit);
    } catch (const api::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        if (is_internal(e.code())) {
            return kExitInternal;
        }
        return e.code() == ErrorCode::NotFactorable || e.code() == ErrorCode::NotGraphic ? kExitNegative
                                                                                          : kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace kfactor::cli
