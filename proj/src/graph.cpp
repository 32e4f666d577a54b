// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wpeb {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.u >= vertex_count_ || e.v >= vertex_count_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.weight < Rational(0) || e.weight > Rational(1)) {
            throw std::invalid_argument("edge weight " + e.weight.to_string() + " outside [0,1]");
        }
        incident_[e.u].push_back(i);
        incident_[e.v].push_back(i);
    }
}

WeightedGraph WeightedGraph::uniform(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                     const Rational& w) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v, w});
    return {vertex_count, std::move(es)};
}

std::optional<Rational> WeightedGraph::weight_between(Vertex u, Vertex v) const {
    std::optional<Rational> best;
    if (u >= vertex_count_) return best;
    for (auto i : incident_[u]) {
        const auto& e = edges_[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            if (!best || e.weight > *best) best = e.weight;
        }
    }
    return best;
}

WeightedGraph WeightedGraph::with_weights(std::span<const Rational> weights) const {
    if (weights.size() != edges_.size()) throw std::invalid_argument("weight count does not match edge count");
    std::vector<Edge> es = edges_;
    for (std::size_t i = 0; i < es.size(); ++i) es[i].weight = weights[i];
    return {vertex_count_, std::move(es)};
}

std::vector<Rational> WeightedGraph::weights() const {
    std::vector<Rational> w;
    w.reserve(edges_.size());
    for (const auto& e : edges_) w.push_back(e.weight);
    return w;
}

namespace {

bool connected_over(const WeightedGraph& g, bool positive_only) {
    if (g.vertex_count() <= 1) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (auto i : g.incident(x)) {
            const auto& e = g.edge(i);
            if (positive_only && e.weight.is_zero()) continue;
            Vertex y = e.u == x ? e.v : e.u;
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == g.vertex_count();
}

}  // namespace

bool WeightedGraph::is_connected() const { return connected_over(*this, true); }
bool WeightedGraph::is_connected_topology() const { return connected_over(*this, false); }
bool WeightedGraph::is_tree() const {
    return vertex_count_ >= 1 && edges_.size() + 1 == vertex_count_ && is_connected_topology();
}

Rational total_weight(const WeightedGraph& g) {
    Rational sum;
    for (const auto& e : g.edges()) sum += e.weight;
    return sum;
}

Configuration::Configuration(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    for (auto c : counts_) {
        if (c < 0) throw std::invalid_argument("negative pebble count");
    }
}

void Configuration::set(Vertex v, std::int64_t count) {
    if (count < 0) throw std::invalid_argument("negative pebble count");
    counts_.at(v) = count;
}

void Configuration::add(Vertex v, std::int64_t delta) { set(v, checked_add(counts_.at(v), delta)); }

std::int64_t Configuration::size() const {
    std::int64_t s = 0;
    for (auto c : counts_) s = checked_add(s, c);
    return s;
}

std::pair<Configuration, MoveStep> apply_move_step(const WeightedGraph& g, const Configuration& c, Vertex from,
                                                   Vertex to, std::int64_t k) {
    if (c.vertex_count() != g.vertex_count()) throw std::invalid_argument("configuration does not match graph");
    if (k <= 0) throw std::invalid_argument("a move removes a positive number of pebbles");
    auto w = g.weight_between(from, to);
    if (!w) {
        throw std::invalid_argument("no edge between " + std::to_string(from) + " and " + std::to_string(to));
    }
    if (c[from] < k) {
        throw std::invalid_argument("vertex " + std::to_string(from) + " holds " + std::to_string(c[from]) +
                                    " pebbles, cannot remove " + std::to_string(k));
    }
    MoveStep step{from, to, k, w->floor_times(k)};
    Configuration next = c;
    next.add(from, -k);
    next.add(to, step.delivered);
    return {std::move(next), step};
}

Configuration apply_move(const WeightedGraph& g, const Configuration& c, Vertex from, Vertex to, std::int64_t k) {
    return apply_move_step(g, c, from, to, k).first;
}

ExtCount edge_requirement(const Rational& w) {
    if (w.is_zero()) return ExtCount::infinite();
    return ExtCount(ceil_div(1, w));
}

ExtCount path_requirement(std::span<const Rational> weights) {
    std::int64_t r = 1;
    for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
        if (it->is_zero()) return ExtCount::infinite();
        r = ceil_div(r, *it);
    }
    return ExtCount(r);
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Vertex{0}); }
    Vertex find(Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
    std::vector<Vertex> parent;
};

}  // namespace

Normalization normalize(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& e : g.edges()) {
        if (e.weight == Rational(1)) uf.unite(e.u, e.v);
    }
    // Roots are the smallest members, so numbering roots in order numbers classes
    // by smallest member.
    Normalization out;
    out.class_of.assign(n, 0);
    std::vector<Vertex> class_of_root(n, 0);
    Vertex classes = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (uf.find(v) == v) class_of_root[v] = classes++;
    }
    for (Vertex v = 0; v < n; ++v) out.class_of[v] = class_of_root[uf.find(v)];

    std::map<std::pair<Vertex, Vertex>, std::pair<Rational, std::pair<Vertex, Vertex>>> best;
    for (const auto& e : g.edges()) {
        if (e.weight.is_zero() || e.weight == Rational(1)) continue;
        Vertex a = out.class_of[e.u];
        Vertex b = out.class_of[e.v];
        if (a == b) continue;
        std::pair<Vertex, Vertex> rep{e.u, e.v};
        if (b < a) {
            std::swap(a, b);
            std::swap(rep.first, rep.second);
        }
        auto [it, inserted] = best.try_emplace({a, b}, e.weight, rep);
        if (!inserted && e.weight > it->second.first) it->second = {e.weight, rep};
    }
    std::vector<Edge> edges;
    for (const auto& [key, val] : best) {
        edges.push_back({key.first, key.second, val.first});
        out.representative.push_back(val.second);
    }
    out.graph = WeightedGraph(classes, std::move(edges));
    return out;
}

Configuration project(const Normalization& n, const Configuration& c) {
    if (c.vertex_count() != n.class_of.size()) throw std::invalid_argument("configuration does not match graph");
    Configuration out(n.graph.vertex_count());
    for (Vertex v = 0; v < c.vertex_count(); ++v) out.add(n.class_of[v], c[v]);
    return out;
}

bool isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (n > 9) throw std::invalid_argument("isomorphic: graph too large for brute force");
    using Key = std::pair<std::pair<Vertex, Vertex>, Rational>;
    auto keyed = [](const WeightedGraph& g, const std::vector<Vertex>& perm) {
        std::vector<Key> keys;
        for (const auto& e : g.edges()) {
            Vertex x = perm[e.u];
            Vertex y = perm[e.v];
            keys.push_back({{std::min(x, y), std::max(x, y)}, e.weight});
        }
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    std::vector<Vertex> identity(n);
    std::iota(identity.begin(), identity.end(), Vertex{0});
    const auto target = keyed(b, identity);
    std::vector<Vertex> perm = identity;
    do {
        if (keyed(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace wpeb
