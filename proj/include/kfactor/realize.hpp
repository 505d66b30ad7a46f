// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <utility>

#include "kfactor/generate.hpp"
#include "kfactor/graph.hpp"
#include "kfactor/sequence.hpp"

namespace kfactor {

/// Havel–Hakimi realization: vertex i receives degree seq[i]. The vertex with
/// the largest remaining demand is joined to the next-largest ones; ties go to
/// the lowest index, so the result is deterministic. Throws NotGraphic.
SimpleGraph realize(const DegreeSequence& seq);

/// Same construction for per-vertex degrees in any order.
SimpleGraph realize_degrees(std::span<const int> degrees);

/// r-regular circulant: i ~ i +- 1..floor(r/2), plus the antipode i + n/2 when
/// r is odd. Throws InfeasibleRegular unless 0 <= r <= n-1 and nr is even.
SimpleGraph circulant_regular(int n, int r);

/// The first s vertices are universal; the middle block carries an (x-s)-regular
/// circulant; the last s vertices keep degree s. Realizes family_sequence(fp).
SimpleGraph realize_family(const FamilyParams& fp, FamilyRule rule = FamilyRule::General);

/// Realization of family_sequence(fp) - k on all n vertices: the first k vertices
/// form a clique joined to the middle block, the middle block carries an
/// (x-2k)-regular circulant and the last k vertices are isolated.
SimpleGraph realize_family_minus_k(const FamilyParams& fp, FamilyRule rule = FamilyRule::General);

struct PackingDemo {
    SimpleGraph cycle_factor;  ///< Hamiltonian cycle on all n vertices
    SimpleGraph matching;      ///< perfect matching on the degree-3 prefix
};

/// Packs a Hamiltonian cycle with the perfect matching {2i, 2i+1} on the
/// degree-3 vertices; the cycle order keeps matched pairs apart. Throws
/// InvalidPackingParams, or PackingFailed if the two would overlap.
PackingDemo packing_demo_realize(int num_threes, int num_twos);

}  // namespace kfactor
