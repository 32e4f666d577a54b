// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpeb/ext_count.hpp"
#include "wpeb/graph.hpp"
#include "wpeb/rational.hpp"

namespace wpeb {

/// Candidate edge weights b/a with 1 <= a <= max_denominator and 0 <= b <= a,
/// ascending and deduplicated.
struct GridSpec {
    std::int64_t max_denominator = 1;
    std::vector<Rational> values;

    /// Grid that is exact for p-solvability: denominators up to p.
    static GridSpec for_pebbles(std::int64_t p);
    static GridSpec with_max_denominator(std::int64_t d);
};

struct DistributionReport {
    std::vector<Rational> weights;  ///< indexed like the graph's edges
    Rational total;
    ExtCount wp_value;  ///< pebbling number of the weighted graph
};

/// Pebbling number of `g` under its own weights, by the solver. The tree
/// partition formula can fall below the true value, so it is used only as a
/// lower bound for pruning.
[[nodiscard]] ExtCount weighted_graph_wp(const WeightedGraph& g);

/// Builds a report for `weights` on the topology of `g`, computing wp_value.
[[nodiscard]] DistributionReport make_report(const WeightedGraph& g, std::vector<Rational> weights);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchProgress {
    std::int64_t pebbles = 0;
    std::int64_t candidates = 0;       ///< feasibility checks so far
    std::size_t branches_done = 0;     ///< finished values of the first edge
    std::size_t branches_total = 0;
    std::optional<Rational> best;
};

struct SearchControl {
    /// Replaces the exact grid for p.
    std::optional<GridSpec> grid;
    /// Only distributions with total <= upper_bound are of interest.
    std::optional<Rational> upper_bound;
    /// Return the first distribution within the bound instead of the minimum.
    bool stop_at_first = false;
    /// Throws BudgetExceeded once passed.
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::function<void(const SearchProgress&)> on_progress;
    /// JSON checkpoint, rewritten after each finished first-edge branch and read
    /// back on start when its fingerprint matches the search.
    std::optional<std::string> checkpoint_path;
};

struct MinWeightResult {
    Rational value;
    DistributionReport witness;
    std::int64_t candidates = 0;
};

/// Smallest total weight over grid-valued distributions on the edges of `g`
/// (its own weights are ignored) making every size-p configuration reach every
/// target. Among minimizers the lexicographically smallest weight vector in
/// search order wins. Empty when nothing within `upper_bound` exists, which for
/// the default grid and no bound means `g` is disconnected.
[[nodiscard]] std::optional<MinWeightResult> min_weight_function(const WeightedGraph& g, std::int64_t p,
                                                                 const SearchControl& control = {});

struct WpResult {
    std::int64_t value = 0;
    /// Padded to total exactly |E|/2.
    DistributionReport witness;
};

/// Smallest p for which some distribution of total |E|/2 makes `g` p-solvable.
/// Throws std::invalid_argument when `g` is disconnected.
[[nodiscard]] WpResult weighted_pebbling_number(const WeightedGraph& g, const SearchControl& control = {});

/// Raises the smallest weights to a common level so the total becomes `target`.
/// Requires sum(weights) <= target <= weights.size().
[[nodiscard]] std::vector<Rational> water_fill(std::vector<Rational> weights, const Rational& target);

struct EdgeCountEntry {
    WeightedGraph graph;
    std::int64_t wp = 0;
    DistributionReport witness;
    bool prop_complete = true;  ///< wp = 1 iff |E| >= 2n - 2
    bool prop_power = true;     ///< |E| = 2n - 2 - k implies wp <= 2^k
    bool prop_near = true;      ///< |E| = 2n - 3 implies wp = 2
    [[nodiscard]] bool ok() const { return prop_complete && prop_power && prop_near; }
};

struct EdgeCountReport {
    std::vector<EdgeCountEntry> entries;
    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::vector<const EdgeCountEntry*> counterexamples() const;
};

/// All connected graphs on 1..n_max vertices up to isomorphism.
[[nodiscard]] EdgeCountReport verify_edge_count_props(std::size_t n_max, const SearchControl& control = {});

struct RequiredWeightsReport {
    std::int64_t max_denominator = 0;
    /// Distributions with the requested total and wp equal to p_target, in
    /// lexicographic order of their weight vectors.
    std::vector<DistributionReport> matches;
    /// Multiset intersection of the matches' weights, ascending.
    std::vector<Rational> common_weights;
    /// Per edge, the weight shared by every match.
    std::vector<std::optional<Rational>> fixed_edges;
    /// Smallest wp over every enumerated distribution with the requested total.
    /// On trees, distributions whose formula lower bound already exceeds
    /// p_target contribute that bound instead of the exact value.
    ExtCount min_wp_seen = ExtCount::infinite();
    std::int64_t enumerated = 0;
};

/// Every grid-valued distribution on `g` with total exactly `total`, keeping
/// those with wp = p_target (checked by the solver).
[[nodiscard]] RequiredWeightsReport required_edge_weights(const WeightedGraph& g, std::int64_t p_target,
                                                          const Rational& total, const GridSpec& grid);

struct ConjectureReport {
    std::int64_t wp = 0;
    Rational min_weight;
    Rational half_edges;
    DistributionReport witness;
    [[nodiscard]] bool holds() const { return min_weight == half_edges; }
};

/// Compares the minimum weight at p = wp(T) with |E(T)|/2.
[[nodiscard]] ConjectureReport conjecture_full_weight_check(const WeightedGraph& tree, const SearchControl& control = {});

}  // namespace wpeb
