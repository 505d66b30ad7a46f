// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace kfactor::service {

struct Config {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string cors_origin = "*";
    int max_n = 10000;
};

struct Response {
    int status = 200;
    std::string body;  ///< always a JSON document
};

/// Serves one request to `endpoint` ("check", "generate" or "kfactor") with a
/// JSON body. Errors use {"error": {"code", "message"}}: 400 for schema
/// violations, 422 for domain errors, 500 for internal failures.
Response handle(const std::string& endpoint, const std::string& body, const Config& config = {});

/// Installs POST /api/{check,generate,kfactor}, GET /api/health and CORS handling.
void register_routes(httplib::Server& server, const Config& config);

}  // namespace kfactor::service
