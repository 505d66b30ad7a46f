// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace kfactor {

using Rational = boost::rational<std::int64_t>;

/// A nonincreasing sequence of nonnegative vertex degrees, n >= 1.
///
/// The plain constructor accepts zeros because derived sequences such as d - k
/// legitimately contain isolated vertices. Use `positive()` for sequences that
/// describe a graph without isolated vertices.
class DegreeSequence {
public:
    /// Throws InvalidSequence unless `degrees` is nonempty, nonnegative and nonincreasing.
    explicit DegreeSequence(std::vector<int> degrees);

    /// As the constructor, additionally requiring every degree to be > 0.
    static DegreeSequence positive(std::vector<int> degrees);

    /// Sorts `degrees` into nonincreasing order first.
    static DegreeSequence sorted(std::vector<int> degrees);

    std::size_t size() const noexcept { return degrees_.size(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    int front() const { return degrees_.front(); }
    int back() const { return degrees_.back(); }
    std::int64_t sum() const noexcept;
    std::span<const int> degrees() const noexcept { return degrees_; }
    const std::vector<int>& values() const noexcept { return degrees_; }

    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
};

/// Bounds a >= d_1 and d_n >= b of the class K(a, b), with the exact length
/// threshold (a + b + 1)^2 / 4b above which every even-sum member is graphic.
class KabParams {
public:
    /// Throws InvalidKab unless a >= b > 0.
    KabParams(int a, int b);

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    Rational threshold() const noexcept { return threshold_; }

private:
    int a_;
    int b_;
    Rational threshold_;
};

/// Erdős–Gallai test. Handles zero entries.
bool is_graphic_eg(const DegreeSequence& seq);

/// Same test on an arbitrary (unsorted) list of nonnegative degrees.
bool is_graphic_eg(std::span<const int> degrees);

bool in_kab(const DegreeSequence& seq, const KabParams& p);

/// Smallest integer length strictly above the K(a, b) threshold. In connected
/// mode the bound 4 / (2 + b - a) also applies; it exists only for a - b < 2,
/// otherwise ConnectedBoundUnavailable is thrown.
int zz_min_length(const KabParams& p, bool k_connected);

struct RaoResult {
    bool holds = true;
    /// Smallest violating s when `holds` is false.
    std::optional<int> witness;
};

/// Checks sum_{i<=s} d_i < s(n-s-1) + sum of the s smallest degrees for every
/// integer 1 <= s < n/2.
RaoResult rao_connected_predicate(const DegreeSequence& seq);

/// Elementwise d_i - k. Throws KTooLarge when d_n < k.
DegreeSequence subtract_k(const DegreeSequence& seq, int k);

bool is_k_factorable(const DegreeSequence& seq, int k);

}  // namespace kfactor
