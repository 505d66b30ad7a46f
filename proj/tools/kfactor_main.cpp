// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "kfactor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return kfactor::cli::run(args, std::cout, std::cerr);
}
