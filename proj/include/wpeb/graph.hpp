// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wpeb/ext_count.hpp"
#include "wpeb/rational.hpp"

namespace wpeb {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Rational weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..vertex_count-1 with weights in [0, 1].
/// Self-loops are rejected at construction.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges);

    /// Same topology with every edge weighted 1/2 (or `w`).
    static WeightedGraph uniform(std::size_t vertex_count,
                                 const std::vector<std::pair<Vertex, Vertex>>& edges,
                                 const Rational& w = Rational(1, 2));

    [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(std::size_t i) const { return edges_.at(i); }

    /// Indices of the edges incident to v.
    [[nodiscard]] std::span<const std::size_t> incident(Vertex v) const { return incident_.at(v); }

    /// Largest weight among the edges joining u and v, if any.
    [[nodiscard]] std::optional<Rational> weight_between(Vertex u, Vertex v) const;

    /// Same edges in the same order, weights replaced.
    [[nodiscard]] WeightedGraph with_weights(std::span<const Rational> weights) const;

    [[nodiscard]] std::vector<Rational> weights() const;

    /// Connectivity over edges of positive weight.
    [[nodiscard]] bool is_connected() const;
    /// Connectivity ignoring weights.
    [[nodiscard]] bool is_connected_topology() const;
    /// Connected and |E| = |V| - 1 (weights ignored).
    [[nodiscard]] bool is_tree() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

[[nodiscard]] Rational total_weight(const WeightedGraph& g);

/// Pebble counts per vertex.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::size_t vertex_count) : counts_(vertex_count, 0) {}
    explicit Configuration(std::vector<std::int64_t> counts);

    [[nodiscard]] std::size_t vertex_count() const { return counts_.size(); }
    [[nodiscard]] std::int64_t operator[](Vertex v) const { return counts_.at(v); }
    void set(Vertex v, std::int64_t count);
    void add(Vertex v, std::int64_t delta);

    /// Total number of pebbles.
    [[nodiscard]] std::int64_t size() const;
    [[nodiscard]] const std::vector<std::int64_t>& counts() const { return counts_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<std::int64_t> counts_;
};

struct MoveStep {
    Vertex from = 0;
    Vertex to = 0;
    std::int64_t removed = 0;
    std::int64_t delivered = 0;

    friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

/// Remove k pebbles from `from`, add floor(k w) to `to`, where w is the largest
/// weight of an edge joining them. Throws std::invalid_argument when there is no
/// such edge or `from` holds fewer than k pebbles.
[[nodiscard]] Configuration apply_move(const WeightedGraph& g, const Configuration& c, Vertex from, Vertex to,
                                       std::int64_t k);

/// Same as apply_move, and reports the step taken.
[[nodiscard]] std::pair<Configuration, MoveStep> apply_move_step(const WeightedGraph& g, const Configuration& c,
                                                                 Vertex from, Vertex to, std::int64_t k);

/// ceil(1/w); infinite for w = 0.
[[nodiscard]] ExtCount edge_requirement(const Rational& w);

/// Smallest number of pebbles on the first vertex of a directed path that moves
/// one pebble to its last vertex, for edge weights listed in traversal order.
[[nodiscard]] ExtCount path_requirement(std::span<const Rational> weights);

/// Result of deleting weight-0 edges, contracting weight-1 edges, dropping the
/// resulting loops and keeping only the heaviest edge of each parallel bundle.
struct Normalization {
    WeightedGraph graph;
    /// Original vertex -> class (vertex of `graph`). Classes are numbered by
    /// their smallest original member.
    std::vector<Vertex> class_of;
    /// For each edge of `graph`, an original edge realizing its weight, oriented
    /// so that `first` lies in the class of graph.edge(i).u.
    std::vector<std::pair<Vertex, Vertex>> representative;
};

[[nodiscard]] Normalization normalize(const WeightedGraph& g);

/// Configuration pushed through a normalization map (counts summed per class).
[[nodiscard]] Configuration project(const Normalization& n, const Configuration& c);

/// Isomorphism test by brute force over vertex permutations; graphs must be
/// small (at most 9 vertices). Parallel edges are compared as weight multisets.
[[nodiscard]] bool isomorphic(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace wpeb
