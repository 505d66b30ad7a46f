// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"

#include "kfactor/service.hpp"

int main(int argc, char** argv) {
    kfactor::service::Config config;
    if (const char* port = std::getenv("KFACTOR_PORT")) {
        config.port = std::atoi(port);
    }
    if (const char* host = std::getenv("KFACTOR_HOST")) {
        config.host = host;
    }
    CLI::App app{"HTTP+JSON service for the kfactor toolkit", "kfactor-server"};
    app.add_option("--host", config.host, "Listen address (env KFACTOR_HOST)");
    app.add_option("--port", config.port, "Listen port (env KFACTOR_PORT)");
    app.add_option("--cors-origin", config.cors_origin, "Access-Control-Allow-Origin value");
    app.add_option("--max-n", config.max_n, "Largest sequence length accepted");
    CLI11_PARSE(app, argc, argv);

    httplib::Server server;
    kfactor::service::register_routes(server, config);
    std::cerr << "listening on " << config.host << ':' << config.port << '\n';
    if (!server.listen(config.host, config.port)) {
        std::cerr << "failed to bind " << config.host << ':' << config.port << '\n';
        return 1;
    }
    return 0;
}
