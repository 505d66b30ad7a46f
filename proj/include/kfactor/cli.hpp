// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfactor::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 2;   ///< not graphic / not factorable
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;    ///< parameters outside an operation's domain
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfactor::cli
