// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wpeb {

namespace {

std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

std::size_t pair_index(std::size_t n, Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    // Row-major upper triangle.
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

bool connected_mask(std::size_t n, std::uint64_t mask, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    if (n <= 1) return true;
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!(mask >> i & 1U)) continue;
        Vertex a = find(pairs[i].first);
        Vertex b = find(pairs[i].second);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

std::uint64_t canonical_mask(std::size_t n, std::uint64_t mask, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1U) m |= std::uint64_t{1} << pair_index(n, perm[pairs[i].first], perm[pairs[i].second]);
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

WeightedGraph from_mask(std::size_t n, std::uint64_t mask, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1U) edges.push_back(pairs[i]);
    }
    return WeightedGraph::uniform(n, edges);
}

}  // namespace

std::uint64_t canonical_code(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_code: at most 8 vertices");
    const auto pairs = all_pairs(n);
    std::uint64_t mask = 0;
    for (const auto& e : g.edges()) mask |= std::uint64_t{1} << pair_index(n, e.u, e.v);
    return canonical_mask(n, mask, pairs);
}

std::vector<WeightedGraph> connected_graphs(std::size_t n) {
    if (n == 0 || n > 6) throw std::invalid_argument("connected_graphs: 1 <= n <= 6");
    const auto pairs = all_pairs(n);
    std::set<std::pair<int, std::uint64_t>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        if (!connected_mask(n, mask, pairs)) continue;
        seen.emplace(__builtin_popcountll(mask), canonical_mask(n, mask, pairs));
    }
    std::vector<WeightedGraph> out;
    for (const auto& [count, code] : seen) out.push_back(from_mask(n, code, pairs));
    return out;
}

namespace {

std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : adj[v]) {
        if (w != parent) kids.push_back(rooted_code(adj, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

}  // namespace

std::string canonical_tree_code(const WeightedGraph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("canonical_tree_code: not a tree");
    const std::size_t n = tree.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& e : tree.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    // Strip leaves layer by layer down to the one or two centers.
    std::vector<std::size_t> degree(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : adj[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    const Vertex none = static_cast<Vertex>(n);
    std::string best;
    for (Vertex c : layer) {
        std::string code = rooted_code(adj, c, none);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<WeightedGraph> trees(std::size_t n) {
    if (n == 0) throw std::invalid_argument("trees: n >= 1");
    std::map<std::string, std::vector<std::pair<Vertex, Vertex>>> level{{"()", {}}};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, std::vector<std::pair<Vertex, Vertex>>> next;
        for (const auto& [code, edges] : level) {
            for (Vertex v = 0; v + 1 < size; ++v) {
                auto grown = edges;
                grown.emplace_back(v, static_cast<Vertex>(size - 1));
                auto g = WeightedGraph::uniform(size, grown);
                next.try_emplace(canonical_tree_code(g), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<WeightedGraph> out;
    for (const auto& [code, edges] : level) out.push_back(WeightedGraph::uniform(n, edges));
    return out;
}

WeightedGraph star_graph(std::size_t leaves, const Rational& w) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return WeightedGraph::uniform(leaves + 1, edges, w);
}

WeightedGraph complete_graph(std::size_t n, const Rational& w) { return WeightedGraph::uniform(n, all_pairs(n), w); }

WeightedGraph uniform_path(std::size_t edges, const Rational& w) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex i = 0; i < edges; ++i) es.emplace_back(i, i + 1);
    return WeightedGraph::uniform(edges + 1, es, w);
}

}  // namespace wpeb
