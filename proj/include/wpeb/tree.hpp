// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "wpeb/ext_count.hpp"
#include "wpeb/graph.hpp"

namespace wpeb {

/// Directed path listed from its start to its end, with the requirement of
/// traversing it in that direction.
struct DirectedPathSpec {
    std::vector<Vertex> vertices;
    std::int64_t requirement = 1;

    [[nodiscard]] std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    friend bool operator==(const DirectedPathSpec&, const DirectedPathSpec&) = default;
};

struct PathPartition {
    std::vector<DirectedPathSpec> paths;

    /// Sum of requirements minus the number of paths plus one.
    [[nodiscard]] std::int64_t value() const;
};

/// Greedy partition of a weighted tree's edges into directed paths: each path
/// ends at the target or on an earlier path and has the largest requirement
/// available at its stage. Ties go to the lexicographically smallest vertex
/// sequence. Throws std::invalid_argument if `tree` is not a tree or has a
/// zero-weight edge.
[[nodiscard]] PathPartition max_path_partition(const WeightedGraph& tree, Vertex target);

/// Weighted pebbling number of a tree for a fixed target, from its maximum path
/// partition. Same errors as max_path_partition.
[[nodiscard]] std::int64_t tree_wp_target(const WeightedGraph& tree, Vertex target);

/// Maximum of tree_wp_target over all targets. Infinite if any edge has weight 0.
/// Throws std::invalid_argument if `tree` is not a tree.
[[nodiscard]] ExtCount tree_wp(const WeightedGraph& tree);

/// Every value the partition formula takes over all tie-breaking choices among
/// maximal-requirement paths. Exponential; intended for small trees.
[[nodiscard]] std::set<std::int64_t> partition_values_over_ties(const WeightedGraph& tree, Vertex target);

/// Pebbling number of an unweighted tree (edge weights of `tree` are ignored).
/// Evaluated twice: through tree_wp with every weight 1/2, and through
/// longest-path partitions summing 2^length; a disagreement throws
/// std::logic_error.
[[nodiscard]] std::int64_t chung_number(const WeightedGraph& tree);

}  // namespace wpeb
