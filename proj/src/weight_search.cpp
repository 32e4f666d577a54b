// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/weight_search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wpeb/enumerate.hpp"
#include "wpeb/solver.hpp"
#include "wpeb/tree.hpp"

namespace wpeb {

GridSpec GridSpec::with_max_denominator(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("grid denominator must be positive");
    std::set<Rational> seen;
    for (std::int64_t a = 1; a <= d; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) seen.insert(Rational(b, a));
    }
    return GridSpec{d, {seen.begin(), seen.end()}};
}

GridSpec GridSpec::for_pebbles(std::int64_t p) { return with_max_denominator(p); }

ExtCount weighted_graph_wp(const WeightedGraph& g) { return pebbling_number(g); }

DistributionReport make_report(const WeightedGraph& g, std::vector<Rational> weights) {
    DistributionReport r;
    r.total = std::accumulate(weights.begin(), weights.end(), Rational(0));
    r.wp_value = weighted_graph_wp(g.with_weights(weights));
    r.weights = std::move(weights);
    return r;
}

std::vector<Rational> water_fill(std::vector<Rational> weights, const Rational& target) {
    const Rational sum = std::accumulate(weights.begin(), weights.end(), Rational(0));
    if (sum > target) throw std::invalid_argument("water_fill: weights already exceed the target");
    if (target > Rational(static_cast<std::int64_t>(weights.size()))) {
        throw std::invalid_argument("water_fill: target exceeds the edge count");
    }
    if (sum == target) return weights;
    std::vector<Rational> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    // Raise the j smallest weights to a common level L.
    Rational rest = sum;
    for (std::size_t j = 1; j <= m; ++j) {
        rest = rest - sorted[j - 1];
        const Rational level = (target - rest) / Rational(static_cast<std::int64_t>(j));
        if (level < sorted[j - 1]) continue;
        if (j < m && level > sorted[j]) continue;
        for (auto& w : weights) w = std::max(w, level);
        return weights;
    }
    throw std::logic_error("water_fill: no level found");
}

namespace {

std::vector<std::size_t> bfs_edge_order(const WeightedGraph& g) {
    std::vector<std::size_t> order;
    std::vector<bool> placed(g.edge_count(), false);
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<Vertex> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const Vertex v = queue[i];
            std::vector<std::size_t> inc(g.incident(v).begin(), g.incident(v).end());
            std::sort(inc.begin(), inc.end());
            for (std::size_t e : inc) {
                if (placed[e]) continue;
                placed[e] = true;
                order.push_back(e);
                const Vertex w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

bool is_bridge(const WeightedGraph& g, std::size_t e) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (i != e) rest.push_back(g.edge(i));
    }
    return !WeightedGraph(g.vertex_count(), std::move(rest)).is_connected_topology();
}

std::string fingerprint(const WeightedGraph& g, std::int64_t p, const GridSpec& grid, const SearchControl& c) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << ";e=";
    for (const auto& e : g.edges()) out << e.u << '-' << e.v << ',';
    out << ";p=" << p << ";d=" << grid.max_denominator << ";ub=" << (c.upper_bound ? c.upper_bound->to_string() : "-")
        << ";first=" << c.stop_at_first;
    return out.str();
}

struct Checkpoint {
    std::size_t next_value_index = 0;
    std::int64_t candidates = 0;
    std::optional<std::vector<Rational>> incumbent;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path, const std::string& print) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (j.value("format", "") != "wpeb-checkpoint/1" || j.value("fingerprint", "") != print) return std::nullopt;
    Checkpoint cp;
    cp.next_value_index = j.at("next_value_index").get<std::size_t>();
    cp.candidates = j.at("candidates").get<std::int64_t>();
    if (!j.at("incumbent").is_null()) {
        std::vector<Rational> w;
        for (const auto& s : j.at("incumbent").at("weights")) w.push_back(Rational::parse(s.get<std::string>()));
        cp.incumbent = std::move(w);
    }
    return cp;
}

void save_checkpoint(const std::string& path, const std::string& print, const Checkpoint& cp) {
    nlohmann::json j;
    j["format"] = "wpeb-checkpoint/1";
    j["fingerprint"] = print;
    j["next_value_index"] = cp.next_value_index;
    j["candidates"] = cp.candidates;
    if (cp.incumbent) {
        nlohmann::json w = nlohmann::json::array();
        Rational total(0);
        for (const auto& x : *cp.incumbent) {
            w.push_back(x.to_string());
            total = total + x;
        }
        j["incumbent"] = {{"total", total.to_string()}, {"weights", w}};
    } else {
        j["incumbent"] = nullptr;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

class GridSearch {
public:
    GridSearch(const WeightedGraph& g, std::int64_t p, const SearchControl& control)
        : g_(g),
          p_(p),
          control_(control),
          grid_(control.grid ? *control.grid : GridSpec::for_pebbles(p)),
          tree_(g.is_tree()),
          order_(bfs_edge_order(g)),
          weights_(g.edge_count(), Rational(1)),
          lower_(g.edge_count(), 0) {
        const auto& vals = grid_.values;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!is_bridge(g, e)) continue;
            // A lone bridge must pass at least one of p pebbles.
            auto it = std::find_if(vals.begin(), vals.end(), [&](const Rational& v) { return v.floor_times(p) >= 1; });
            lower_[e] = static_cast<std::size_t>(it - vals.begin());
        }
        rest_lower_.assign(order_.size() + 1, Rational(0));
        for (std::size_t i = order_.size(); i-- > 0;) {
            const std::size_t li = lower_[order_[i]];
            rest_lower_[i] = rest_lower_[i + 1] + (li < vals.size() ? vals[li] : Rational(1));
        }
    }

    std::optional<MinWeightResult> run() {
        if (g_.edge_count() == 0) {
            if (!p_solvable(g_, p_)) return std::nullopt;
            return MinWeightResult{Rational(0), make_report(g_, {}), 0};
        }
        for (std::size_t li : lower_) {
            if (li >= grid_.values.size()) return std::nullopt;
        }
        std::size_t start = 0;
        std::string print;
        if (control_.checkpoint_path) {
            print = fingerprint(g_, p_, grid_, control_);
            if (auto cp = load_checkpoint(*control_.checkpoint_path, print)) {
                start = cp->next_value_index;
                candidates_ = cp->candidates;
                if (cp->incumbent) set_best(*cp->incumbent);
            }
        }
        if (!(best_ && control_.stop_at_first)) search_first_edge(start, print);
        if (!best_) return std::nullopt;
        return MinWeightResult{best_total_, make_report(g_, *best_), candidates_};
    }

private:
    void set_best(std::vector<Rational> w) {
        best_total_ = std::accumulate(w.begin(), w.end(), Rational(0));
        best_ = std::move(w);
    }

    bool done() const { return control_.stop_at_first && best_.has_value(); }

    // Largest value index for position i that can still beat the incumbent and
    // respect the upper bound.
    std::optional<std::size_t> top_index(std::size_t i, const Rational& partial) const {
        const auto& vals = grid_.values;
        const Rational room_base = partial + rest_lower_[i + 1];
        std::optional<std::size_t> top;
        for (std::size_t vi = lower_[order_[i]]; vi < vals.size(); ++vi) {
            const Rational t = room_base + vals[vi];
            if (control_.upper_bound && t > *control_.upper_bound) break;
            if (best_ && t >= best_total_) break;
            top = vi;
        }
        return top;
    }

    bool feasible() {
        if (control_.deadline && std::chrono::steady_clock::now() > *control_.deadline) {
            throw BudgetExceeded("weight search budget exhausted");
        }
        ++candidates_;
        const WeightedGraph h = g_.with_weights(weights_);
        if (tree_) {
            // The partition formula never exceeds the true value, so it only rules out.
            const ExtCount lower = tree_wp(h);
            if (lower.is_infinite() || lower.value() > p_) return false;
        }
        return p_solvable(h, p_);
    }

    // Smallest value index in [lo, hi] for position i that is feasible with all
    // later edges at weight 1.
    std::optional<std::size_t> first_feasible(std::size_t i, std::size_t lo, std::size_t hi) {
        const std::size_t e = order_[i];
        weights_[e] = grid_.values[hi];
        if (!feasible()) return std::nullopt;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            weights_[e] = grid_.values[mid];
            if (feasible()) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return hi;
    }

    void dfs(std::size_t i, const Rational& partial) {
        const std::size_t e = order_[i];
        auto top = top_index(i, partial);
        if (!top) return;
        auto first = first_feasible(i, lower_[e], *top);
        if (!first) {
            weights_[e] = Rational(1);
            return;
        }
        if (i + 1 == order_.size()) {
            weights_[e] = grid_.values[*first];
            set_best(weights_);
            return;
        }
        for (std::size_t vi = *first; !done(); ++vi) {
            top = top_index(i, partial);
            if (!top || vi > *top) break;
            weights_[e] = grid_.values[vi];
            dfs(i + 1, partial + grid_.values[vi]);
        }
        weights_[e] = Rational(1);
    }

    void search_first_edge(std::size_t start, const std::string& print) {
        const std::size_t e = order_[0];
        const auto top0 = top_index(0, Rational(0));
        SearchProgress progress;
        progress.pebbles = p_;
        progress.branches_total = top0 ? *top0 + 1 : 0;
        auto report = [&](std::size_t next) {
            progress.candidates = candidates_;
            progress.branches_done = next;
            if (best_) progress.best = best_total_;
            if (control_.on_progress) control_.on_progress(progress);
            if (control_.checkpoint_path) save_checkpoint(*control_.checkpoint_path, print, {next, candidates_, best_});
        };
        std::size_t vi = std::max(start, lower_[e]);
        if (top0 && vi <= *top0) {
            if (auto first = first_feasible(0, vi, *top0)) {
                vi = *first;
            } else {
                vi = *top0 + 1;
            }
        }
        while (!done()) {
            const auto top = top_index(0, Rational(0));
            if (!top || vi > *top) break;
            weights_[e] = grid_.values[vi];
            if (order_.size() == 1) {
                set_best(weights_);
            } else {
                dfs(1, grid_.values[vi]);
            }
            ++vi;
            report(vi);
        }
        report(std::max(vi, progress.branches_total));
    }

    const WeightedGraph& g_;
    std::int64_t p_;
    const SearchControl& control_;
    GridSpec grid_;
    bool tree_;
    std::vector<std::size_t> order_;
    std::vector<Rational> weights_;
    std::vector<std::size_t> lower_;
    std::vector<Rational> rest_lower_;
    std::optional<std::vector<Rational>> best_;
    Rational best_total_;
    std::int64_t candidates_ = 0;
};

SearchControl inherit(const SearchControl& c) {
    SearchControl out;
    out.deadline = c.deadline;
    out.on_progress = c.on_progress;
    return out;
}

}  // namespace

std::optional<MinWeightResult> min_weight_function(const WeightedGraph& g, std::int64_t p,
                                                   const SearchControl& control) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!g.is_connected_topology()) return std::nullopt;
    return GridSearch(g, p, control).run();
}

WpResult weighted_pebbling_number(const WeightedGraph& g, const SearchControl& control) {
    if (g.vertex_count() == 0 || !g.is_connected_topology()) {
        throw std::invalid_argument("weighted_pebbling_number: graph must be connected");
    }
    const Rational half(static_cast<std::int64_t>(g.edge_count()), 2);
    std::vector<Rational> best(g.edge_count(), Rational(1, 2));
    // Weight 1/2 everywhere has total |E|/2, so its pebbling number is an upper bound.
    std::int64_t best_p = weighted_graph_wp(g.with_weights(best)).value();
    for (std::int64_t p = best_p - 1; p >= 1; --p) {
        SearchControl c = inherit(control);
        c.upper_bound = half;
        c.stop_at_first = true;
        if (control.checkpoint_path) c.checkpoint_path = *control.checkpoint_path + ".p" + std::to_string(p);
        auto r = min_weight_function(g, p, c);
        if (!r) break;
        best_p = p;
        best = r->witness.weights;
    }
    WpResult out{best_p, make_report(g, water_fill(best, half))};
    if (out.witness.wp_value != ExtCount(best_p)) {
        throw std::logic_error("weighted_pebbling_number: padded witness has wp " + out.witness.wp_value.to_string() +
                               ", expected " + std::to_string(best_p));
    }
    return out;
}

bool EdgeCountReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const EdgeCountEntry& e) { return e.ok(); });
}

std::vector<const EdgeCountEntry*> EdgeCountReport::counterexamples() const {
    std::vector<const EdgeCountEntry*> out;
    for (const auto& e : entries) {
        if (!e.ok()) out.push_back(&e);
    }
    return out;
}

EdgeCountReport verify_edge_count_props(std::size_t n_max, const SearchControl& control) {
    EdgeCountReport report;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (auto& g : connected_graphs(n)) {
            const auto wp = weighted_pebbling_number(g, inherit(control));
            const auto edges = static_cast<std::int64_t>(g.edge_count());
            const auto two_n = 2 * static_cast<std::int64_t>(n);
            EdgeCountEntry entry{std::move(g), wp.value, wp.witness};
            entry.prop_complete = (wp.value == 1) == (edges >= two_n - 2);
            if (edges == two_n - 3) entry.prop_near = wp.value == 2;
            const std::int64_t k = two_n - 2 - edges;
            if (k >= 0) entry.prop_power = k < 62 && wp.value <= (std::int64_t{1} << k);
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

namespace {

// Index tuples over `slots` edges whose scaled values sum to each total.
void enumerate_sums(const std::vector<std::int64_t>& scaled, std::size_t slots, std::int64_t cap,
                    std::map<std::int64_t, std::vector<std::vector<std::size_t>>>& out) {
    std::vector<std::size_t> cur(slots, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        if (i == slots) {
            out[sum].push_back(cur);
            return;
        }
        for (std::size_t vi = 0; vi < scaled.size() && sum + scaled[vi] <= cap; ++vi) {
            cur[i] = vi;
            self(self, i + 1, sum + scaled[vi]);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

RequiredWeightsReport required_edge_weights(const WeightedGraph& g, std::int64_t p_target, const Rational& total,
                                            const GridSpec& grid) {
    if (!g.is_connected_topology()) throw std::invalid_argument("required_edge_weights: graph must be connected");
    RequiredWeightsReport report;
    report.max_denominator = grid.max_denominator;
    const std::size_t m = g.edge_count();
    report.fixed_edges.assign(m, std::nullopt);

    std::int64_t lcm = 1;
    for (const auto& v : grid.values) lcm = std::lcm(lcm, v.den());
    const Rational scaled_total = total * Rational(lcm);
    if (!scaled_total.is_integer() || total < Rational(0)) return report;
    const std::int64_t target = scaled_total.num();
    std::vector<std::int64_t> scaled;
    for (const auto& v : grid.values) scaled.push_back((v * Rational(lcm)).num());

    const std::size_t left = m / 2;
    std::map<std::int64_t, std::vector<std::vector<std::size_t>>> lhs;
    std::map<std::int64_t, std::vector<std::vector<std::size_t>>> rhs;
    enumerate_sums(scaled, left, target, lhs);
    enumerate_sums(scaled, m - left, target, rhs);

    std::vector<std::vector<std::size_t>> tuples;
    for (const auto& [sum, as] : lhs) {
        auto it = rhs.find(target - sum);
        if (it == rhs.end()) continue;
        for (const auto& a : as) {
            for (const auto& b : it->second) {
                auto t = a;
                t.insert(t.end(), b.begin(), b.end());
                tuples.push_back(std::move(t));
            }
        }
    }
    std::sort(tuples.begin(), tuples.end());

    const bool tree = g.is_tree();
    for (const auto& t : tuples) {
        std::vector<Rational> w;
        w.reserve(m);
        for (std::size_t vi : t) w.push_back(grid.values[vi]);
        ++report.enumerated;
        if (tree) {
            const ExtCount lower = tree_wp(g.with_weights(w));
            if (lower > ExtCount(p_target)) {
                report.min_wp_seen = std::min(report.min_wp_seen, lower);
                continue;
            }
        }
        auto rep = make_report(g, std::move(w));
        report.min_wp_seen = std::min(report.min_wp_seen, rep.wp_value);
        if (rep.wp_value == ExtCount(p_target)) report.matches.push_back(std::move(rep));
    }

    if (!report.matches.empty()) {
        auto common = report.matches.front().weights;
        std::sort(common.begin(), common.end());
        for (std::size_t e = 0; e < m; ++e) report.fixed_edges[e] = report.matches.front().weights[e];
        for (const auto& rep : report.matches) {
            auto w = rep.weights;
            std::sort(w.begin(), w.end());
            std::vector<Rational> next;
            std::set_intersection(common.begin(), common.end(), w.begin(), w.end(), std::back_inserter(next));
            common = std::move(next);
            for (std::size_t e = 0; e < m; ++e) {
                if (report.fixed_edges[e] && *report.fixed_edges[e] != rep.weights[e]) report.fixed_edges[e].reset();
            }
        }
        report.common_weights = std::move(common);
    }
    return report;
}

ConjectureReport conjecture_full_weight_check(const WeightedGraph& tree, const SearchControl& control) {
    if (!tree.is_tree()) throw std::invalid_argument("conjecture_full_weight_check: not a tree");
    ConjectureReport out;
    out.wp = weighted_pebbling_number(tree, control).value;
    auto r = min_weight_function(tree, out.wp, inherit(control));
    if (!r) throw std::logic_error("conjecture_full_weight_check: no distribution at wp");
    out.min_weight = r->value;
    out.witness = r->witness;
    out.half_edges = Rational(static_cast<std::int64_t>(tree.edge_count()), 2);
    return out;
}

}  // namespace wpeb
