// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "kfactor/factor.hpp"
#include "kfactor/graph.hpp"
#include "kfactor/sequence.hpp"

namespace kfactor {

/// Connected components, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> components(const SimpleGraph& g);

struct FactorReport {
    DegreeSequence sequence;
    int k = 0;
    RaoResult rao;
    std::vector<std::vector<Vertex>> factor_components;
    bool factor_connected = false;
};

/// Cross-checks a computed factor against the connected-factor inequalities.
/// A connected factor for a sequence that fails them throws InconsistentReport.
FactorReport report(const DegreeSequence& d, int k, const FactorComputation& fc);

}  // namespace kfactor
