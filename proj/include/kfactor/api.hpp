// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kfactor/analyze.hpp"
#include "kfactor/factor.hpp"
#include "kfactor/graph.hpp"
#include "kfactor/sequence.hpp"

// JSON and DOT encodings shared by the command-line tool and the HTTP service,
// so both surfaces emit identical payloads for identical inputs.
namespace kfactor::api {

using json = nlohmann::json;

inline constexpr std::string_view kVersion = "1.0.0";

/// Malformed user input (bad integer list, missing field, wrong JSON type).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "3,3,2,2" or "3 3 2 2" (commas and whitespace both separate).
std::vector<int> parse_int_list(std::string_view text);

/// Sorts nonincreasing; throws kfactor::Error(InvalidSequence) on negatives.
DegreeSequence to_sequence(const std::vector<int>& values);

json graph_json(const SimpleGraph& g);

/// `graph { i -- j; }` with one edge per line in ascending order.
std::string to_dot(const SimpleGraph& g);

json trace_json(const std::vector<SwitchStep>& trace);
json report_json(const FactorReport& r);

json check_payload(const DegreeSequence& seq, std::optional<int> k);

struct GenerateRequest {
    std::string mode;  ///< connected | heuristic | disconnected
    int a = 0;
    int b = 0;
    int k = 0;
    int n = 0;
    std::uint64_t seed = 0;
    int max_retries = 1000;
};

json generate_payload(const GenerateRequest& req);

struct KFactorBundle {
    json payload;
    FactorComputation computation;
    SimpleGraph realization;  ///< complement of the final B, realizes d
};

KFactorBundle kfactor_bundle(const DegreeSequence& seq, int k);

}  // namespace kfactor::api
