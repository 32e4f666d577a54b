// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpeb {

namespace {

struct Neighbor {
    Vertex to;
    std::size_t edge;
};

struct TreeView {
    const WeightedGraph& g;
    std::vector<std::vector<Neighbor>> adj;

    explicit TreeView(const WeightedGraph& tree) : g(tree), adj(tree.vertex_count()) {
        if (!tree.is_tree()) throw std::invalid_argument("graph is not a tree");
        for (std::size_t i = 0; i < tree.edge_count(); ++i) {
            const auto& e = tree.edge(i);
            adj[e.u].push_back({e.v, i});
            adj[e.v].push_back({e.u, i});
        }
        for (auto& list : adj) {
            std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
        }
    }
};

void require_positive(const WeightedGraph& tree) {
    for (const auto& e : tree.edges()) {
        if (e.weight.is_zero()) throw std::invalid_argument("tree has a zero-weight edge");
    }
}

// All directed paths in the unused part of the tree that end at a covered vertex.
std::vector<DirectedPathSpec> candidates(const TreeView& tv, const std::vector<bool>& covered,
                                         const std::vector<bool>& used) {
    std::vector<DirectedPathSpec> out;
    const std::size_t n = tv.g.vertex_count();
    for (Vertex x = 0; x < n; ++x) {
        if (!covered[x]) continue;
        // Walk outward from x; each reached vertex y gives the path y -> ... -> x.
        std::vector<Vertex> parent(n, x);
        std::vector<std::int64_t> req(n, 1);
        std::vector<Vertex> stack{x};
        std::vector<bool> seen(n, false);
        seen[x] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& nb : tv.adj[v]) {
                if (used[nb.edge] || seen[nb.to]) continue;
                seen[nb.to] = true;
                parent[nb.to] = v;
                req[nb.to] = ceil_div(req[v], tv.g.edge(nb.edge).weight);
                DirectedPathSpec p;
                for (Vertex at = nb.to; at != x; at = parent[at]) p.vertices.push_back(at);
                p.vertices.push_back(x);
                p.requirement = req[nb.to];
                out.push_back(std::move(p));
                stack.push_back(nb.to);
            }
        }
    }
    return out;
}

std::vector<DirectedPathSpec> maximal(std::vector<DirectedPathSpec> cands) {
    std::int64_t top = 0;
    for (const auto& c : cands) top = std::max(top, c.requirement);
    std::vector<DirectedPathSpec> out;
    for (auto& c : cands) {
        if (c.requirement == top) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const DirectedPathSpec& a, const DirectedPathSpec& b) { return a.vertices < b.vertices; });
    return out;
}

void take(const TreeView& tv, const DirectedPathSpec& p, std::vector<bool>& covered, std::vector<bool>& used) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        Vertex a = p.vertices[i];
        Vertex b = p.vertices[i + 1];
        for (const auto& nb : tv.adj[a]) {
            if (nb.to == b) used[nb.edge] = true;
        }
        covered[a] = true;
    }
}

}  // namespace

std::int64_t PathPartition::value() const {
    std::int64_t sum = 1;
    for (const auto& p : paths) sum = checked_add(sum, p.requirement - 1);
    return sum;
}

PathPartition max_path_partition(const WeightedGraph& tree, Vertex target) {
    TreeView tv(tree);
    require_positive(tree);
    if (target >= tree.vertex_count()) throw std::invalid_argument("target not in tree");
    std::vector<bool> covered(tree.vertex_count(), false);
    std::vector<bool> used(tree.edge_count(), false);
    covered[target] = true;
    PathPartition out;
    for (std::size_t done = 0; done < tree.edge_count();) {
        auto best = maximal(candidates(tv, covered, used));
        const auto& p = best.front();
        take(tv, p, covered, used);
        done += p.length();
        out.paths.push_back(p);
    }
    return out;
}

std::int64_t tree_wp_target(const WeightedGraph& tree, Vertex target) {
    return max_path_partition(tree, target).value();
}

ExtCount tree_wp(const WeightedGraph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("graph is not a tree");
    for (const auto& e : tree.edges()) {
        if (e.weight.is_zero()) return ExtCount::infinite();
    }
    std::int64_t best = 1;
    for (Vertex t = 0; t < tree.vertex_count(); ++t) best = std::max(best, tree_wp_target(tree, t));
    return ExtCount(best);
}

std::set<std::int64_t> partition_values_over_ties(const WeightedGraph& tree, Vertex target) {
    TreeView tv(tree);
    require_positive(tree);
    if (target >= tree.vertex_count()) throw std::invalid_argument("target not in tree");
    std::set<std::int64_t> values;
    std::vector<bool> covered(tree.vertex_count(), false);
    std::vector<bool> used(tree.edge_count(), false);
    covered[target] = true;
    auto rec = [&](auto&& self, std::size_t done, std::int64_t acc) -> void {
        if (done == tree.edge_count()) {
            values.insert(acc);
            return;
        }
        for (const auto& p : maximal(candidates(tv, covered, used))) {
            auto saved_cov = covered;
            auto saved_used = used;
            take(tv, p, covered, used);
            self(self, done + p.length(), acc + p.requirement - 1);
            covered = std::move(saved_cov);
            used = std::move(saved_used);
        }
    };
    rec(rec, 0, 1);
    return values;
}

namespace {

// Longest-path greedy for an unweighted tree rooted at `target`: each stage takes
// a longest path hanging from the covered part.
std::int64_t chung_direct(const TreeView& tv, Vertex target) {
    const std::size_t n = tv.g.vertex_count();
    std::vector<bool> covered(n, false);
    std::vector<bool> used(tv.g.edge_count(), false);
    covered[target] = true;
    std::int64_t sum = 1;
    for (std::size_t done = 0; done < tv.g.edge_count();) {
        std::size_t best_len = 0;
        std::vector<Vertex> best_path;
        for (Vertex x = 0; x < n; ++x) {
            if (!covered[x]) continue;
            std::vector<std::size_t> depth(n, 0);
            std::vector<Vertex> parent(n, x);
            std::vector<Vertex> bfs{x};
            std::vector<bool> seen(n, false);
            seen[x] = true;
            for (std::size_t i = 0; i < bfs.size(); ++i) {
                for (const auto& nb : tv.adj[bfs[i]]) {
                    if (used[nb.edge] || seen[nb.to]) continue;
                    seen[nb.to] = true;
                    depth[nb.to] = depth[bfs[i]] + 1;
                    parent[nb.to] = bfs[i];
                    bfs.push_back(nb.to);
                }
            }
            for (Vertex y : bfs) {
                if (depth[y] > best_len) {
                    best_len = depth[y];
                    best_path.clear();
                    for (Vertex at = y; at != x; at = parent[at]) best_path.push_back(at);
                    best_path.push_back(x);
                }
            }
        }
        DirectedPathSpec p{best_path, 1};
        take(tv, p, covered, used);
        done += best_len;
        if (best_len >= 62) throw OverflowError("path too long for 2^length");
        sum = checked_add(sum, (std::int64_t{1} << best_len) - 1);
    }
    return sum;
}

}  // namespace

std::int64_t chung_number(const WeightedGraph& tree) {
    TreeView tv(tree);
    std::vector<Rational> halves(tree.edge_count(), Rational(1, 2));
    const std::int64_t weighted = tree_wp(tree.with_weights(halves)).value();
    std::int64_t direct = 1;
    for (Vertex t = 0; t < tree.vertex_count(); ++t) direct = std::max(direct, chung_direct(tv, t));
    if (weighted != direct) {
        throw std::logic_error("chung_number: weighted route " + std::to_string(weighted) + " != direct route " +
                               std::to_string(direct));
    }
    return direct;
}

}  // namespace wpeb
