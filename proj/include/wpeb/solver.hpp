// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wpeb/ext_count.hpp"
#include "wpeb/graph.hpp"

namespace wpeb {

struct SolveCertificate {
    bool solvable = false;
    /// Legal moves on the input graph ending with a pebble on the target; empty
    /// when unsolvable or when the target already holds a pebble.
    std::vector<MoveStep> moves;
};

struct UnsolvableWitness {
    Configuration configuration;
    Vertex target = 0;
};

struct PSolvability {
    bool solvable = false;
    /// First failing (configuration, target) pair in colex order of
    /// configurations, targets ascending within a configuration.
    std::optional<UnsolvableWitness> witness;
};

/// Reachability of one target on a normalized graph, memoizing solvable and
/// unsolvable states across queries. Every move on a normalized graph loses
/// pebbles, so the state space reachable from any configuration is finite and
/// acyclic. Not thread-safe; make one per thread.
class TargetSearch {
public:
    /// `graph` must be normalized (all weights strictly between 0 and 1).
    TargetSearch(const WeightedGraph& graph, Vertex target);
    ~TargetSearch();
    TargetSearch(TargetSearch&&) noexcept;
    TargetSearch& operator=(TargetSearch&&) noexcept;

    [[nodiscard]] Vertex target() const;

    /// Counts are on the normalized graph's vertices.
    [[nodiscard]] bool reachable(std::span<const std::int64_t> counts);

    /// Move sequence on the normalized graph; empty optional when unsolvable.
    [[nodiscard]] std::optional<std::vector<MoveStep>> solution(std::span<const std::int64_t> counts);

    /// Largest size of a configuration that cannot reach the target, found by
    /// walking the down-closed set of unsolvable configurations. Stops early and
    /// returns `cap` once an unsolvable configuration of size >= cap is seen.
    /// Infinite when some vertex cannot reach the target at all.
    [[nodiscard]] ExtCount max_unsolvable_size(std::optional<std::int64_t> cap = std::nullopt);

    /// Number of memoized states (diagnostics).
    [[nodiscard]] std::size_t memo_size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

[[nodiscard]] SolveCertificate is_solvable(const WeightedGraph& g, const Configuration& c, Vertex target);

/// True when replaying `moves` from `c` is legal and leaves a pebble on `target`.
[[nodiscard]] bool replay(const WeightedGraph& g, const Configuration& c, Vertex target,
                          std::span<const MoveStep> moves);

/// Every configuration of exactly p pebbles reaches every target.
[[nodiscard]] PSolvability is_p_solvable(const WeightedGraph& g, std::int64_t p);

/// is_p_solvable(g, p).solvable without searching for a witness.
[[nodiscard]] bool p_solvable(const WeightedGraph& g, std::int64_t p);

/// Smallest p such that every size-p configuration reaches `target`; infinite
/// when the positive-weight edges do not connect the graph.
[[nodiscard]] ExtCount pebbling_number(const WeightedGraph& g, Vertex target);

/// Maximum of pebbling_number(g, t) over all targets.
[[nodiscard]] ExtCount pebbling_number(const WeightedGraph& g);

/// Compositions of `total` into `parts` non-negative parts in colex order (the
/// last coordinate is most significant). Calls `visit` until it returns false.
template <class Visit>
void for_each_composition(std::size_t parts, std::int64_t total, Visit&& visit) {
    if (parts == 0) {
        if (total == 0) visit(std::vector<std::int64_t>{});
        return;
    }
    std::vector<std::int64_t> c(parts, 0);
    bool keep_going = true;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
        if (!keep_going) return;
        if (i == 0) {
            c[0] = rest;
            keep_going = visit(std::as_const(c));
            return;
        }
        for (std::int64_t x = 0; x <= rest && keep_going; ++x) {
            c[i] = x;
            self(self, i - 1, rest - x);
        }
        c[i] = 0;
    };
    rec(rec, parts - 1, total);
}

}  // namespace wpeb
