// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "kfactor/sequence.hpp"

namespace kfactor {

/// All generators draw from this engine; its name is echoed in output metadata.
using Prng = std::mt19937_64;
inline constexpr std::string_view kPrngName = "mt19937_64";

/// Uniform integer in [lo, hi] by rejection sampling on raw engine output, so
/// results do not depend on the standard library's distribution classes.
std::int64_t uniform_int(Prng& rng, std::int64_t lo, std::int64_t hi);

struct GenerationParams {
    int a = 0;
    int b = 0;
    int k = 1;
    std::uint64_t seed = 0;
    int max_retries = 1000;
};

/// (n - 1)^s x^(n - 2s) s^s with s = k.
struct FamilyParams {
    int n = 0;
    int k = 0;
    int x = 0;
};

/// Which published range/parity condition a family is checked against.
enum class FamilyRule {
    General,    ///< 2s <= x <= n-s-1, n even
    ClaimTwo,   ///< k = 2: 4 <= x <= n-3, (n-4)x even
    ClaimThree, ///< k = 3: 6 <= x <= n-4, n even
};

/// Trial-and-error search: random K(a, b) sequences of the minimum length
/// (plus one when that length times k is odd) until one is k-factorable and
/// satisfies the connected-factor inequalities. Throws RetriesExhausted after
/// `max_retries` draws.
DegreeSequence generate_heuristic(const GenerationParams& p);

/// Deterministic-length generator whose output always satisfies the
/// connected-factor inequalities; re-draws until d - k is graphic.
DegreeSequence generate_connected(const GenerationParams& p);

/// Draws x uniformly among valid-parity values of the rule's range, then
/// returns family_sequence. Throws InvalidFamilyParams or NoValidX.
DegreeSequence generate_disconnected(int n, int k, std::uint64_t seed,
                                     FamilyRule rule = FamilyRule::General);

/// Throws InvalidFamilyParams naming the first violated constraint.
void validate_family(const FamilyParams& fp, FamilyRule rule = FamilyRule::General);

DegreeSequence family_sequence(const FamilyParams& fp, FamilyRule rule = FamilyRule::General);

/// (3, ..., 3, 2, ..., 2) with an even number of 3's and length >= 4.
DegreeSequence packing_demo_sequence(int num_threes, int num_twos);

}  // namespace kfactor
