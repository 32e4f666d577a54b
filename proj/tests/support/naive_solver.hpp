// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "wpeb/graph.hpp"
#include "wpeb/solver.hpp"

namespace wpeb::testing {

/// Breadth-first search over every move with every k on the raw graph: no
/// normalization, no pruning, no memo shared between calls.
inline bool naive_reachable(const WeightedGraph& g, const std::vector<std::int64_t>& start, Vertex target) {
    std::set<std::vector<std::int64_t>> seen{start};
    std::deque<std::vector<std::int64_t>> queue{start};
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        if (s[target] >= 1) return true;
        for (const auto& e : g.edges()) {
            for (int dir = 0; dir < 2; ++dir) {
                const Vertex a = dir ? e.v : e.u;
                const Vertex b = dir ? e.u : e.v;
                for (std::int64_t k = 1; k <= s[a]; ++k) {
                    auto next = s;
                    next[a] -= k;
                    next[b] += e.weight.floor_times(k);
                    if (seen.insert(next).second) queue.push_back(std::move(next));
                }
            }
        }
    }
    return false;
}

/// Smallest p with every size-p configuration reaching `target`, scanning p
/// upward; nullopt if none up to p_max.
inline std::optional<std::int64_t> naive_pebbling_number(const WeightedGraph& g, Vertex target, std::int64_t p_max) {
    for (std::int64_t p = 1; p <= p_max; ++p) {
        bool all = true;
        for_each_composition(g.vertex_count(), p, [&](const std::vector<std::int64_t>& c) {
            all = naive_reachable(g, c, target);
            return all;
        });
        if (all) return p;
    }
    return std::nullopt;
}

/// First configuration of size p (colex order) that cannot reach `target`.
inline std::optional<std::vector<std::int64_t>> naive_unsolvable(const WeightedGraph& g, Vertex target,
                                                                 std::int64_t p) {
    std::optional<std::vector<std::int64_t>> found;
    for_each_composition(g.vertex_count(), p, [&](const std::vector<std::int64_t>& c) {
        if (!naive_reachable(g, c, target)) found = c;
        return !found;
    });
    return found;
}

}  // namespace wpeb::testing
