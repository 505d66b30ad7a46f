// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/service.hpp"

#include <chrono>
#include <stdexcept>

#include "httplib.h"

#include "kfactor/api.hpp"
#include "kfactor/error.hpp"

namespace kfactor::service {

namespace {

using api::json;

struct HttpError {
    int status;
    std::string code;
    std::string message;
};

json error_body(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

template <typename T>
T required(const json& body, const char* key) {
    if (!body.contains(key)) {
        throw HttpError{400, "SchemaViolation", std::string("missing field '") + key + "'"};
    }
    try {
        return body.at(key).get<T>();
    } catch (const json::exception&) {
        throw HttpError{400, "SchemaViolation", std::string("field '") + key + "' has the wrong type"};
    }
}

template <typename T>
T optional_field(const json& body, const char* key, T fallback) {
    if (!body.contains(key) || body.at(key).is_null()) {
        return fallback;
    }
    return required<T>(body, key);
}

void check_size(std::int64_t n, const Config& config) {
    if (n > config.max_n) {
        throw HttpError{422, "RequestTooLarge",
                        "n=" + std::to_string(n) + " exceeds the limit of " + std::to_string(config.max_n)};
    }
}

DegreeSequence sequence_field(const json& body, const Config& config) {
    const auto values = required<std::vector<int>>(body, "seq");
    if (values.empty()) {
        throw HttpError{400, "SchemaViolation", "field 'seq' must be nonempty"};
    }
    check_size(static_cast<std::int64_t>(values.size()), config);
    return api::to_sequence(values);
}

json dispatch(const std::string& endpoint, const json& body, const Config& config) {
    if (!body.is_object()) {
        throw HttpError{400, "SchemaViolation", "request body must be a JSON object"};
    }
    if (endpoint == "check") {
        const DegreeSequence seq = sequence_field(body, config);
        std::optional<int> k;
        if (body.contains("k") && !body.at("k").is_null()) {
            k = required<int>(body, "k");
        }
        return api::check_payload(seq, k);
    }
    if (endpoint == "generate") {
        api::GenerateRequest req;
        req.mode = required<std::string>(body, "mode");
        req.a = optional_field<int>(body, "a", 0);
        req.b = optional_field<int>(body, "b", 0);
        req.k = optional_field<int>(body, "k", 2);
        req.n = optional_field<int>(body, "n", 0);
        req.seed = optional_field<std::uint64_t>(body, "seed", 0);
        req.max_retries = optional_field<int>(body, "max_retries", 1000);
        if (req.mode == "disconnected") {
            check_size(req.n, config);
        } else if (req.a >= req.b && req.b > 0) {
            const KabParams kab(req.a, req.b);
            check_size(zz_min_length(kab, false), config);
        }
        return api::generate_payload(req);
    }
    if (endpoint == "kfactor") {
        const DegreeSequence seq = sequence_field(body, config);
        return api::kfactor_bundle(seq, required<int>(body, "k")).payload;
    }
    throw HttpError{404, "NotFound", "unknown endpoint '" + endpoint + "'"};
}

}  // namespace

Response handle(const std::string& endpoint, const std::string& body, const Config& config) {
    const auto start = std::chrono::steady_clock::now();
    json request;
    try {
        request = json::parse(body);
    } catch (const json::parse_error& e) {
        return {400, error_body("SchemaViolation", std::string("invalid JSON: ") + e.what()).dump()};
    }
    try {
        json payload = dispatch(endpoint, request, config);
        if (!payload.contains("seed")) {
            payload["seed"] = request.contains("seed") ? request.at("seed") : json(nullptr);
        }
        payload["version"] = std::string(api::kVersion);
        payload["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return {200, payload.dump()};
    } catch (const HttpError& e) {
        return {e.status, error_body(e.code, e.message).dump()};
    } catch (const api::UsageError& e) {
        return {400, error_body("SchemaViolation", e.what()).dump()};
    } catch (const Error& e) {
        const int status = is_internal(e.code()) ? 500 : 422;
        return {status, error_body(std::string(to_string(e.code())), e.what()).dump()};
    } catch (const std::exception& e) {
        return {500, error_body("InternalError", e.what()).dump()};
    }
}

void register_routes(httplib::Server& server, const Config& config) {
    const std::string origin = config.cors_origin;
    server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(json{{"status", "ok"}, {"version", std::string(api::kVersion)}}.dump(),
                        "application/json");
    });
    for (const char* endpoint : {"check", "generate", "kfactor"}) {
        const std::string name = endpoint;
        server.Post("/api/" + name, [name, config](const httplib::Request& req, httplib::Response& res) {
            const Response out = handle(name, req.body, config);
            res.status = out.status;
            res.set_content(out.body, "application/json");
        });
    }
}

}  // namespace kfactor::service
