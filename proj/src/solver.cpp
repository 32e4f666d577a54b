// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wpeb {

namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto x : s) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct Arc {
    Vertex from = 0;
    Vertex to = 0;
    Rational w;
};

constexpr int kUnreachable = std::numeric_limits<int>::max();

std::vector<int> hop_distances(const WeightedGraph& g, Vertex target) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<Vertex> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (auto i : g.incident(x)) {
            const auto& e = g.edge(i);
            Vertex y = e.u == x ? e.v : e.u;
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

}  // namespace

struct TargetSearch::Impl {
    WeightedGraph graph;
    Vertex target = 0;
    std::vector<Arc> arcs;
    std::vector<int> dist;
    // Largest weight product along a path to the target; sum of count * product
    // never increases under a move and must reach 1 for success.
    std::vector<Rational> potential;
    bool use_potential = true;
    std::unordered_set<State, StateHash> dead;
    std::unordered_map<State, MoveStep, StateHash> alive;

    Impl(const WeightedGraph& g, Vertex t) : graph(g), target(t) {
        if (t >= g.vertex_count()) throw std::invalid_argument("target not in graph");
        for (const auto& e : g.edges()) {
            if (e.weight.is_zero() || e.weight >= Rational(1)) {
                throw std::invalid_argument("TargetSearch needs a normalized graph");
            }
        }
        dist = hop_distances(g, t);
        for (const auto& e : g.edges()) {
            if (e.u != t) arcs.push_back({e.u, e.v, e.weight});
            if (e.v != t) arcs.push_back({e.v, e.u, e.weight});
        }
        // Toward the target first, farthest sources first, so the first descent
        // on a tree is the all-pebbles-forward strategy.
        auto rank = [&](const Arc& a) {
            long df = dist[a.from] == kUnreachable ? 1'000'000 : dist[a.from];
            long dt = dist[a.to] == kUnreachable ? 1'000'000 : dist[a.to];
            return std::tuple{dt - df, -df, a.from, a.to};
        };
        std::stable_sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) { return rank(a) < rank(b); });
        compute_potential();
    }

    void compute_potential() {
        const std::size_t n = graph.vertex_count();
        potential.assign(n, Rational(0));
        potential[target] = Rational(1);
        std::vector<bool> done(n, false);
        try {
            for (std::size_t round = 0; round < n; ++round) {
                std::optional<Vertex> best;
                for (Vertex v = 0; v < n; ++v) {
                    if (!done[v] && (!best || potential[v] > potential[*best])) best = v;
                }
                if (!best || potential[*best].is_zero()) break;
                done[*best] = true;
                for (auto i : graph.incident(*best)) {
                    const auto& e = graph.edge(i);
                    Vertex y = e.u == *best ? e.v : e.u;
                    Rational cand = potential[*best] * e.weight;
                    if (!done[y] && cand > potential[y]) potential[y] = cand;
                }
            }
        } catch (const OverflowError&) {
            use_potential = false;
        }
    }

    bool hopeless(const State& s) {
        if (!use_potential) return false;
        try {
            Rational sum;
            for (Vertex v = 0; v < s.size(); ++v) {
                if (s[v] == 0) continue;
                sum += potential[v] * Rational(s[v]);
                if (sum >= Rational(1)) return false;
            }
            return true;
        } catch (const OverflowError&) {
            return false;
        }
    }

    bool reach(State& s) {
        if (s[target] >= 1) return true;
        if (dead.contains(s)) return false;
        if (alive.contains(s)) return true;
        if (hopeless(s)) {
            dead.insert(s);
            return false;
        }
        for (const auto& arc : arcs) {
            const std::int64_t c = s[arc.from];
            if (c == 0) continue;
            for (std::int64_t m = arc.w.floor_times(c); m >= 1; --m) {
                const std::int64_t k = ceil_div(m, arc.w);
                s[arc.from] -= k;
                s[arc.to] += m;
                const bool ok = reach(s);
                s[arc.from] += k;
                s[arc.to] -= m;
                if (ok) {
                    alive.emplace(s, MoveStep{arc.from, arc.to, k, m});
                    return true;
                }
            }
        }
        dead.insert(s);
        return false;
    }

    State to_state(std::span<const std::int64_t> counts) const {
        if (counts.size() != graph.vertex_count()) throw std::invalid_argument("configuration does not match graph");
        State s(counts.begin(), counts.end());
        for (auto x : s) {
            if (x < 0) throw std::invalid_argument("negative pebble count");
        }
        return s;
    }
};

TargetSearch::TargetSearch(const WeightedGraph& graph, Vertex target)
    : impl_(std::make_unique<Impl>(graph, target)) {}
TargetSearch::~TargetSearch() = default;
TargetSearch::TargetSearch(TargetSearch&&) noexcept = default;
TargetSearch& TargetSearch::operator=(TargetSearch&&) noexcept = default;

Vertex TargetSearch::target() const { return impl_->target; }

bool TargetSearch::reachable(std::span<const std::int64_t> counts) {
    State s = impl_->to_state(counts);
    return impl_->reach(s);
}

std::optional<std::vector<MoveStep>> TargetSearch::solution(std::span<const std::int64_t> counts) {
    State s = impl_->to_state(counts);
    if (!impl_->reach(s)) return std::nullopt;
    std::vector<MoveStep> moves;
    while (s[impl_->target] < 1) {
        const MoveStep step = impl_->alive.at(s);
        moves.push_back(step);
        s[step.from] -= step.removed;
        s[step.to] += step.delivered;
    }
    return moves;
}

ExtCount TargetSearch::max_unsolvable_size(std::optional<std::int64_t> cap) {
    const auto& g = impl_->graph;
    const Vertex t = impl_->target;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (impl_->dist[v] == kUnreachable) return ExtCount::infinite();
    }
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != t) order.push_back(v);
    }
    State s(g.vertex_count(), 0);
    std::int64_t best = 0;
    bool capped = cap && *cap <= 0;
    // Each visited node is an unsolvable configuration supported on order[0..i).
    auto rec = [&](auto&& self, std::size_t i, std::int64_t size) -> void {
        if (capped || i == order.size()) return;
        const Vertex v = order[i];
        self(self, i + 1, size);
        for (std::int64_t c = 1;; ++c) {
            if (capped) break;
            s[v] = c;
            if (impl_->reach(s)) break;
            best = std::max(best, size + c);
            if (cap && best >= *cap) {
                capped = true;
                break;
            }
            self(self, i + 1, size + c);
        }
        s[v] = 0;
    };
    rec(rec, 0, 0);
    if (capped) return ExtCount(std::max<std::int64_t>(*cap, 0));
    return ExtCount(best);
}

std::size_t TargetSearch::memo_size() const { return impl_->dead.size() + impl_->alive.size(); }

namespace {

// Unit-weight adjacency of the original graph, used to shuttle pebbles inside a
// contracted class without loss.
struct UnitPaths {
    const WeightedGraph& g;
    std::vector<std::vector<Vertex>> adj;

    explicit UnitPaths(const WeightedGraph& graph) : g(graph), adj(graph.vertex_count()) {
        for (const auto& e : g.edges()) {
            if (e.weight == Rational(1)) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
        }
    }

    // Moves pebbles along unit edges until `dest` holds at least `need`.
    void gather(Configuration& c, Vertex dest, std::int64_t need, std::vector<MoveStep>& out) const {
        if (c[dest] >= need) return;
        std::vector<Vertex> parent(g.vertex_count(), dest);
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<Vertex> bfs{dest};
        seen[dest] = true;
        for (std::size_t i = 0; i < bfs.size(); ++i) {
            for (Vertex y : adj[bfs[i]]) {
                if (!seen[y]) {
                    seen[y] = true;
                    parent[y] = bfs[i];
                    bfs.push_back(y);
                }
            }
        }
        for (std::size_t i = 1; i < bfs.size() && c[dest] < need; ++i) {
            Vertex x = bfs[i];
            const std::int64_t amount = std::min(c[x], need - c[dest]);
            if (amount == 0) continue;
            for (Vertex at = x; at != dest; at = parent[at]) {
                c.add(at, -amount);
                c.add(parent[at], amount);
                out.push_back({at, parent[at], amount, amount});
            }
        }
        if (c[dest] < need) throw std::logic_error("certificate lifting ran out of pebbles");
    }
};

std::vector<MoveStep> lift(const WeightedGraph& g, const Normalization& norm, Configuration c, Vertex target,
                           std::span<const MoveStep> moves) {
    UnitPaths unit(g);
    std::vector<MoveStep> out;
    for (const auto& mv : moves) {
        // The normalized graph has one edge per class pair.
        std::optional<std::size_t> idx;
        for (auto i : norm.graph.incident(mv.from)) {
            const auto& e = norm.graph.edge(i);
            if ((e.u == mv.from && e.v == mv.to) || (e.v == mv.from && e.u == mv.to)) idx = i;
        }
        if (!idx) throw std::logic_error("certificate lifting: missing normalized edge");
        auto [x, y] = norm.representative[*idx];
        if (norm.graph.edge(*idx).u != mv.from) std::swap(x, y);
        unit.gather(c, x, mv.removed, out);
        auto [next, step] = apply_move_step(g, c, x, y, mv.removed);
        if (step.delivered != mv.delivered) throw std::logic_error("certificate lifting: delivery mismatch");
        c = std::move(next);
        out.push_back(step);
    }
    unit.gather(c, target, 1, out);
    return out;
}

void check_target(const WeightedGraph& g, Vertex target) {
    if (target >= g.vertex_count()) {
        throw std::invalid_argument("target " + std::to_string(target) + " not in graph");
    }
}

}  // namespace

SolveCertificate is_solvable(const WeightedGraph& g, const Configuration& c, Vertex target) {
    check_target(g, target);
    if (c.vertex_count() != g.vertex_count()) throw std::invalid_argument("configuration does not match graph");
    if (c[target] >= 1) return {true, {}};
    const Normalization norm = normalize(g);
    const Configuration pc = project(norm, c);
    TargetSearch search(norm.graph, norm.class_of[target]);
    auto moves = search.solution(pc.counts());
    if (!moves) return {false, {}};
    return {true, lift(g, norm, c, target, *moves)};
}

bool replay(const WeightedGraph& g, const Configuration& c, Vertex target, std::span<const MoveStep> moves) {
    if (target >= g.vertex_count() || c.vertex_count() != g.vertex_count()) return false;
    Configuration cur = c;
    try {
        for (const auto& mv : moves) {
            auto [next, step] = apply_move_step(g, cur, mv.from, mv.to, mv.removed);
            if (step.delivered != mv.delivered) return false;
            cur = std::move(next);
        }
    } catch (const std::invalid_argument&) {
        return false;
    }
    return cur[target] >= 1;
}

PSolvability is_p_solvable(const WeightedGraph& g, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    const Normalization norm = normalize(g);
    const std::size_t classes = norm.graph.vertex_count();
    std::vector<TargetSearch> searches;
    searches.reserve(classes);
    bool all_ok = true;
    for (Vertex t = 0; t < classes; ++t) {
        searches.emplace_back(norm.graph, t);
        if (all_ok && searches.back().max_unsolvable_size(p) >= p) all_ok = false;
    }
    if (all_ok) return {true, std::nullopt};

    PSolvability out;
    for_each_composition(g.vertex_count(), p, [&](const std::vector<std::int64_t>& counts) {
        Configuration c(counts);
        Configuration pc = project(norm, c);
        for (Vertex t = 0; t < g.vertex_count(); ++t) {
            if (c[t] >= 1) continue;
            if (!searches[norm.class_of[t]].reachable(pc.counts())) {
                out.witness = UnsolvableWitness{c, t};
                return false;
            }
        }
        return true;
    });
    if (!out.witness) throw std::logic_error("is_p_solvable: no witness found for an unsolvable case");
    return out;
}

bool p_solvable(const WeightedGraph& g, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (!g.is_connected()) return false;
    const Normalization norm = normalize(g);
    for (Vertex t = 0; t < norm.graph.vertex_count(); ++t) {
        TargetSearch search(norm.graph, t);
        if (search.max_unsolvable_size(p) >= p) return false;
    }
    return true;
}

ExtCount pebbling_number(const WeightedGraph& g, Vertex target) {
    check_target(g, target);
    const Normalization norm = normalize(g);
    TargetSearch search(norm.graph, norm.class_of[target]);
    auto worst = search.max_unsolvable_size();
    if (worst.is_infinite()) return worst;
    return ExtCount(worst.value() + 1);
}

ExtCount pebbling_number(const WeightedGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    const Normalization norm = normalize(g);
    ExtCount best(1);
    for (Vertex t = 0; t < norm.graph.vertex_count(); ++t) {
        TargetSearch search(norm.graph, t);
        auto worst = search.max_unsolvable_size();
        if (worst.is_infinite()) return worst;
        best = std::max(best, ExtCount(worst.value() + 1));
    }
    return best;
}

}  // namespace wpeb
