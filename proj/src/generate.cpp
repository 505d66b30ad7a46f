// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/generate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "kfactor/error.hpp"

namespace kfactor {

std::int64_t uniform_int(Prng& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform_int: empty range");
    }
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) {  // full 64-bit span
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = rng();
    while (draw >= limit) {
        draw = rng();
    }
    return lo + static_cast<std::int64_t>(draw % range);
}

namespace {

void check_generation_params(const GenerationParams& p) {
    if (p.k < 1) {
        fail(ErrorCode::InvalidParams, "k must be >= 1");
    }
    if (p.max_retries < 1) {
        fail(ErrorCode::InvalidParams, "max_retries must be >= 1");
    }
}

// A k-factor on n vertices needs nk even; with an even degree sum and nk odd,
// d - k would have an odd sum.
int length_for_factor(int n, int k) {
    return (static_cast<long long>(n) * k) % 2 == 0 ? n : n + 1;
}

std::vector<int> draw_values(Prng& rng, int count, int lo, int hi) {
    std::vector<int> out(static_cast<std::size_t>(count));
    for (int& v : out) {
        v = static_cast<int>(uniform_int(rng, lo, hi));
    }
    return out;
}

std::int64_t family_sum(int n, int s, int x) {
    return std::int64_t{s} * (n - 1) + std::int64_t{n - 2 * s} * x + std::int64_t{s} * s;
}

struct XRange {
    int lo;
    int hi;
};

XRange family_x_range(int n, int k, FamilyRule rule) {
    switch (rule) {
    case FamilyRule::ClaimTwo: return {4, n - 3};
    case FamilyRule::ClaimThree: return {6, n - 4};
    case FamilyRule::General: break;
    }
    return {2 * k, n - k - 1};
}

// Structural constraints that do not involve x.
void validate_family_shape(int n, int k, FamilyRule rule) {
    auto reject = [&](const std::string& what) {
        fail(ErrorCode::InvalidFamilyParams,
             what + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    };
    if (k < 1) {
        reject("k >= 1 violated");
    }
    if (2 * k >= n) {
        reject("s < n/2 violated");
    }
    if (3 * k + 1 > n) {
        reject("3k + 1 <= n violated");
    }
    if (rule == FamilyRule::ClaimTwo && k != 2) {
        reject("k = 2 rule used with k != 2");
    }
    if (rule == FamilyRule::ClaimThree && k != 3) {
        reject("k = 3 rule used with k != 3");
    }
    if (rule != FamilyRule::ClaimTwo && n % 2 != 0) {
        reject("n even violated");
    }
}

bool family_parity_ok(int n, int k, int x, FamilyRule rule) {
    if (rule == FamilyRule::ClaimTwo && (std::int64_t{n - 4} * x) % 2 != 0) {
        return false;
    }
    return family_sum(n, k, x) % 2 == 0;
}

}  // namespace

DegreeSequence generate_heuristic(const GenerationParams& p) {
    check_generation_params(p);
    const KabParams kab(p.a, p.b);
    const int n = length_for_factor(zz_min_length(kab, false), p.k);
    if (p.b < p.k) {
        fail(ErrorCode::RetriesExhausted,
             "b=" + std::to_string(p.b) + " < k=" + std::to_string(p.k) + " makes d - k negative");
    }
    Prng rng(p.seed);
    for (int attempt = 0; attempt < p.max_retries; ++attempt) {
        auto values = draw_values(rng, n, p.b, p.a);
        std::sort(values.begin(), values.end(), std::greater<>());
        DegreeSequence seq(std::move(values));
        if (!in_kab(seq, kab)) {
            continue;  // odd sum
        }
        if (is_k_factorable(seq, p.k) && rao_connected_predicate(seq).holds) {
            return seq;
        }
    }
    fail(ErrorCode::RetriesExhausted,
         "no k-factorable connected sequence found in " + std::to_string(p.max_retries) + " draws");
}

DegreeSequence generate_connected(const GenerationParams& p) {
    check_generation_params(p);
    const KabParams kab(p.a, p.b);
    const int n = length_for_factor(zz_min_length(kab, true), p.k);
    if (p.b < p.k) {
        fail(ErrorCode::KFactorabilityFailed,
             "b=" + std::to_string(p.b) + " < k=" + std::to_string(p.k) + " makes d - k negative");
    }
    Prng rng(p.seed);
    for (int attempt = 0; attempt < p.max_retries; ++attempt) {
        auto values = draw_values(rng, n - 1, p.b, p.a);
        std::int64_t sum = 0;
        for (int v : values) {
            sum += v;
        }
        // Parity repair: a final value from {b, b+1} within [b, a]; else nudge an
        // earlier entry by one; else lengthen the sequence by one draw.
        bool placed = false;
        for (int growth = 0; growth <= 2 && !placed; ++growth) {
            for (int candidate : {p.b, p.b + 1}) {
                if (candidate <= p.a && (sum + candidate) % 2 == 0) {
                    values.push_back(candidate);
                    placed = true;
                    break;
                }
            }
            if (placed) {
                break;
            }
            for (int& v : values) {
                const int delta = v + 1 <= p.a ? 1 : (v - 1 >= p.b ? -1 : 0);
                if (delta == 0) {
                    continue;
                }
                v += delta;
                sum += delta;
                values.push_back(p.b);
                placed = (sum + p.b) % 2 == 0;
                if (!placed) {
                    values.pop_back();
                }
                break;
            }
            if (!placed) {
                const int extra = static_cast<int>(uniform_int(rng, p.b, p.a));
                values.push_back(extra);
                sum += extra;
            }
        }
        if (!placed) {
            fail(ErrorCode::ParityUnfixable, "cannot reach an even degree sum within [b, a]");
        }
        std::sort(values.begin(), values.end(), std::greater<>());
        DegreeSequence seq(std::move(values));
        if (!in_kab(seq, kab) || !is_graphic_eg(seq) || !rao_connected_predicate(seq).holds) {
            throw std::logic_error("generate_connected produced a sequence outside its guarantees");
        }
        if (is_k_factorable(seq, p.k)) {
            return seq;
        }
    }
    fail(ErrorCode::KFactorabilityFailed,
         "d - k not graphic after " + std::to_string(p.max_retries) + " draws");
}

void validate_family(const FamilyParams& fp, FamilyRule rule) {
    validate_family_shape(fp.n, fp.k, rule);
    const XRange range = family_x_range(fp.n, fp.k, rule);
    if (fp.x < range.lo || fp.x > range.hi) {
        fail(ErrorCode::InvalidFamilyParams,
             "x=" + std::to_string(fp.x) + " outside [" + std::to_string(range.lo) + ", " +
                 std::to_string(range.hi) + "]");
    }
    if (!family_parity_ok(fp.n, fp.k, fp.x, rule)) {
        fail(ErrorCode::InvalidFamilyParams, "degree sum parity violated for x=" + std::to_string(fp.x));
    }
}

DegreeSequence family_sequence(const FamilyParams& fp, FamilyRule rule) {
    validate_family(fp, rule);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(fp.n));
    out.insert(out.end(), static_cast<std::size_t>(fp.k), fp.n - 1);
    out.insert(out.end(), static_cast<std::size_t>(fp.n - 2 * fp.k), fp.x);
    out.insert(out.end(), static_cast<std::size_t>(fp.k), fp.k);
    return DegreeSequence::positive(std::move(out));
}

DegreeSequence generate_disconnected(int n, int k, std::uint64_t seed, FamilyRule rule) {
    validate_family_shape(n, k, rule);
    const XRange range = family_x_range(n, k, rule);
    std::vector<int> valid;
    for (int x = range.lo; x <= range.hi; ++x) {
        if (family_parity_ok(n, k, x, rule)) {
            valid.push_back(x);
        }
    }
    if (valid.empty()) {
        fail(ErrorCode::NoValidX, "no x in range gives an even degree sum");
    }
    Prng rng(seed);
    const auto pick = uniform_int(rng, 0, static_cast<std::int64_t>(valid.size()) - 1);
    return family_sequence({n, k, valid[static_cast<std::size_t>(pick)]}, rule);
}

DegreeSequence packing_demo_sequence(int num_threes, int num_twos) {
    if (num_threes < 2 || num_threes % 2 != 0) {
        fail(ErrorCode::InvalidPackingParams, "number of 3's must be even and >= 2");
    }
    if (num_twos < 0 || num_threes + num_twos < 4) {
        fail(ErrorCode::InvalidPackingParams, "need num_twos >= 0 and total length >= 4");
    }
    std::vector<int> out(static_cast<std::size_t>(num_threes), 3);
    out.insert(out.end(), static_cast<std::size_t>(num_twos), 2);
    return DegreeSequence::positive(std::move(out));
}

}  // namespace kfactor
