// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wpeb/graph.hpp"

namespace wpeb {

/// Connected simple graphs on n vertices up to isomorphism, every weight 1/2.
/// Ordered by edge count, then by canonical code. n <= 6.
[[nodiscard]] std::vector<WeightedGraph> connected_graphs(std::size_t n);

/// Trees on n vertices up to isomorphism, every weight 1/2. n >= 1.
[[nodiscard]] std::vector<WeightedGraph> trees(std::size_t n);

/// Smallest edge bitmask over all vertex relabelings (edge weights ignored).
[[nodiscard]] std::uint64_t canonical_code(const WeightedGraph& g);

/// Center-rooted parenthesis encoding of a tree; equal iff isomorphic.
[[nodiscard]] std::string canonical_tree_code(const WeightedGraph& tree);

[[nodiscard]] WeightedGraph star_graph(std::size_t leaves, const Rational& w = Rational(1, 2));
[[nodiscard]] WeightedGraph complete_graph(std::size_t n, const Rational& w = Rational(1, 2));
[[nodiscard]] WeightedGraph uniform_path(std::size_t edges, const Rational& w = Rational(1, 2));

}  // namespace wpeb
