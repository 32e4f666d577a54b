// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpeb/graph.hpp"
#include "wpeb/rational.hpp"

namespace wpeb {

/// Per-edge weights of a path, listed from its first vertex to its last.
struct WeightAssignment {
    std::vector<Rational> weights;
    Rational total;

    static WeightAssignment of(std::vector<Rational> weights);
    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// Path graph 0 - 1 - ... - n with the given edge weights.
[[nodiscard]] WeightedGraph path_graph(const std::vector<Rational>& weights);

struct OneWayResult {
    Rational weight;
    WeightAssignment witness;
    /// Pebble counts on each vertex along the way: profile.front() = p,
    /// profile.back() = k.
    std::vector<std::int64_t> profile;
};

/// Minimum total weight on a path of `length` edges that carries p pebbles from
/// the first vertex to at least k pebbles on the last. Empty when k > p.
[[nodiscard]] std::optional<OneWayResult> one_way_weight(std::int64_t p, std::int64_t length, std::int64_t k);

struct PathWeightResult {
    Rational weight;
    WeightAssignment witness;
    /// Pebbles on each vertex when p start at vertex 0 (forward) and at vertex n
    /// (backward), vertices listed 0..n in both.
    std::vector<std::int64_t> forward_profile;
    std::vector<std::int64_t> backward_profile;
    /// Witness re-checked against every configuration and target by the solver.
    bool verified = false;
    /// Verification failed and the value came from the general grid search.
    bool escalated = false;
};

struct PathSearchOptions {
    bool verify = true;
};

/// Smallest total weight on a path with n edges for which p pebbles at either
/// end reach the other end, minimized over pairs of pebble profiles; ties go to
/// the lexicographically smallest weight vector. With `verify`, the witness is
/// checked p-solvable for all configurations; a failed check falls back to the
/// grid search in weight_search.hpp.
[[nodiscard]] PathWeightResult path_weight_search(std::int64_t n, std::int64_t p, const PathSearchOptions& opts = {});

/// Closed form for the two-edge path.
[[nodiscard]] Rational wp2_closed_form(std::int64_t p);

struct FMinResult {
    Rational value;  ///< min (a+b)/p over 1 <= a <= b <= p, ab >= p
    std::int64_t a = 0;
    std::int64_t b = 0;
    Rational closed_form;  ///< (2n, 2n+1 or 2n+2)/p, n = floor(sqrt p)
    [[nodiscard]] bool agrees() const { return value == closed_form; }
};
[[nodiscard]] FMinResult f_min(std::int64_t p);

struct GMinResult {
    Rational value;  ///< min 1/a + 1/b over 1 <= a <= b <= p, ab <= p
    std::int64_t a = 0;
    std::int64_t b = 0;
    int piece = 0;  ///< 1..4
    Rational piece_bound;
    bool equality_case = false;  ///< cases 1 and 3 claim equality, 2 and 4 a lower bound
    [[nodiscard]] bool satisfied() const { return equality_case ? value == piece_bound : value >= piece_bound; }
};
[[nodiscard]] GMinResult g_min(std::int64_t p);

struct P3UpperBound {
    Rational value;
    std::int64_t best_k = 0;
    /// Smallest k with k(k+1)(2k+1)/2 >= p, the rounded root of the cubic.
    std::int64_t cubic_k = 0;
    Rational value_at_cubic_k;
    [[nodiscard]] bool cubic_attains() const { return value_at_cubic_k == value; }
};
/// min over k of 2 ceil(p/k)/p + k/ceil(p/k).
[[nodiscard]] P3UpperBound p3_upper_bound(std::int64_t p);
[[nodiscard]] Rational p3_bound_at(std::int64_t p, std::int64_t k);

/// The bound n / p^(1/n). Decisions use integer powers only.
class PathLowerBound {
public:
    PathLowerBound(std::int64_t n, std::int64_t p);

    [[nodiscard]] std::int64_t n() const { return n_; }
    [[nodiscard]] std::int64_t p() const { return p_; }

    /// n/m when p = m^n.
    [[nodiscard]] std::optional<Rational> exact() const;
    /// Sign of (bound - q) for q >= 0, decided by comparing n^n b^n with a^n p.
    [[nodiscard]] std::strong_ordering compare(const Rational& q) const;
    /// "n/p^(1/n)" or the exact value.
    [[nodiscard]] std::string symbolic() const;
    /// Floating approximation for plotting only.
    [[nodiscard]] double approx() const;

private:
    std::int64_t n_;
    std::int64_t p_;
};

[[nodiscard]] PathLowerBound path_lower_bound(std::int64_t n, std::int64_t p);

/// Integer m with m^n = p, if any.
[[nodiscard]] std::optional<std::int64_t> exact_root(std::int64_t p, std::int64_t n);

}  // namespace wpeb
