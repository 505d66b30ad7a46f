// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "kfactor/error.hpp"

namespace kfactor {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) {
        fail(ErrorCode::InvalidSequence, "degree sequence must be nonempty");
    }
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] < 0) {
            fail(ErrorCode::InvalidSequence,
                 "negative degree " + std::to_string(degrees_[i]) + " at position " + std::to_string(i));
        }
        if (i > 0 && degrees_[i] > degrees_[i - 1]) {
            fail(ErrorCode::InvalidSequence,
                 "degree sequence is not nonincreasing at position " + std::to_string(i));
        }
    }
}

DegreeSequence DegreeSequence::positive(std::vector<int> degrees) {
    DegreeSequence seq(std::move(degrees));
    if (seq.back() <= 0) {
        fail(ErrorCode::InvalidSequence, "degree sequence must be strictly positive");
    }
    return seq;
}

DegreeSequence DegreeSequence::sorted(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return DegreeSequence(std::move(degrees));
}

std::int64_t DegreeSequence::sum() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

KabParams::KabParams(int a, int b) : a_(a), b_(b) {
    if (b <= 0 || a < b) {
        fail(ErrorCode::InvalidKab,
             "K(a,b) requires a >= b > 0, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
    const std::int64_t top = std::int64_t{a} + b + 1;
    threshold_ = Rational(top * top, std::int64_t{4} * b);
}

namespace {

// Sorted nonincreasing input; O(n) after the sort.
bool erdos_gallai_sorted(std::span<const int> d) {
    const auto n = static_cast<std::int64_t>(d.size());
    std::int64_t total = 0;
    for (int v : d) {
        total += v;
    }
    if (total % 2 != 0) {
        return false;
    }
    std::vector<std::int64_t> suffix(d.size() + 1, 0);
    for (std::int64_t i = n - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1] + d[i];
    }
    // q = number of leading entries with d_i >= k.
    std::int64_t q = n;
    std::int64_t prefix = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        while (q > 0 && d[q - 1] < k) {
            --q;
        }
        const std::int64_t capped_end = std::max(k, q);
        const std::int64_t rhs = k * (k - 1) + (capped_end - k) * k + suffix[capped_end];
        if (prefix > rhs) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_graphic_eg(const DegreeSequence& seq) {
    return erdos_gallai_sorted(seq.degrees());
}

bool is_graphic_eg(std::span<const int> degrees) {
    if (degrees.empty()) {
        return true;
    }
    std::vector<int> sorted(degrees.begin(), degrees.end());
    if (std::any_of(sorted.begin(), sorted.end(), [](int v) { return v < 0; })) {
        return false;
    }
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return erdos_gallai_sorted(sorted);
}

bool in_kab(const DegreeSequence& seq, const KabParams& p) {
    if (seq.front() > p.a() || seq.back() < p.b() || seq.sum() % 2 != 0) {
        return false;
    }
    return Rational(static_cast<std::int64_t>(seq.size())) >= p.threshold();
}

int zz_min_length(const KabParams& p, bool k_connected) {
    Rational bound = p.threshold();
    if (k_connected) {
        const int denom = 2 + p.b() - p.a();
        if (denom <= 0) {
            fail(ErrorCode::ConnectedBoundUnavailable,
                 "connected length bound needs a - b < 2, got a - b = " + std::to_string(p.a() - p.b()));
        }
        bound = std::max(bound, Rational(4, denom));
    }
    // floor(bound) + 1 is the least integer strictly greater than bound.
    const std::int64_t floor = bound.numerator() / bound.denominator();
    return static_cast<int>(floor + 1);
}

RaoResult rao_connected_predicate(const DegreeSequence& seq) {
    const auto n = static_cast<std::int64_t>(seq.size());
    std::int64_t largest = 0;
    std::int64_t smallest = 0;
    // 1 <= s < n/2  <=>  2s < n.
    for (std::int64_t s = 1; 2 * s < n; ++s) {
        largest += seq[s - 1];
        smallest += seq[n - s];
        if (!(largest < s * (n - s - 1) + smallest)) {
            return {false, static_cast<int>(s)};
        }
    }
    return {};
}

DegreeSequence subtract_k(const DegreeSequence& seq, int k) {
    if (k < 0) {
        fail(ErrorCode::KTooLarge, "k must be nonnegative");
    }
    if (seq.back() < k) {
        fail(ErrorCode::KTooLarge,
             "k=" + std::to_string(k) + " exceeds the minimum degree " + std::to_string(seq.back()));
    }
    std::vector<int> out(seq.begin(), seq.end());
    for (int& v : out) {
        v -= k;
    }
    return DegreeSequence(std::move(out));
}

bool is_k_factorable(const DegreeSequence& seq, int k) {
    if (k < 0 || seq.back() < k || !is_graphic_eg(seq)) {
        return false;
    }
    return is_graphic_eg(subtract_k(seq, k));
}

}  // namespace kfactor
