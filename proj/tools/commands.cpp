// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "wpeb/enumerate.hpp"
#include "wpeb/io.hpp"
#include "wpeb/path_weights.hpp"
#include "wpeb/solver.hpp"
#include "wpeb/tree.hpp"
#include "wpeb/weight_search.hpp"

namespace wpeb::cli {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
}

Range range_or(const std::optional<std::string>& text, Range fallback) {
    return text ? Range::parse(*text) : fallback;
}

const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) throw std::invalid_argument(std::string("missing ") + flag);
    return value;
}

std::int64_t require_pebbles(const Options& o) {
    if (!o.pebbles) throw std::invalid_argument("missing --pebbles");
    if (*o.pebbles < 1) throw std::invalid_argument("--pebbles must be positive");
    return *o.pebbles;
}

bool past(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
    return deadline && std::chrono::steady_clock::now() > *deadline;
}

void print_weights(std::ostream& out, const NamedGraph& g, const std::vector<Rational>& weights) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto& e = g.graph.edge(i);
        out << g.names[e.u] << ' ' << g.names[e.v] << ' ' << weights[i] << '\n';
    }
}

std::string join(const std::vector<Rational>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : " ") + w.to_string();
    return s;
}

std::string decimal(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

double approx(const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); }

SearchControl search_control(const Options& o) {
    SearchControl c;
    if (o.grid_denominator) {
        if (*o.grid_denominator < 1) throw std::invalid_argument("--grid-denominator must be positive");
        c.grid = GridSpec::with_max_denominator(*o.grid_denominator);
    }
    c.deadline = o.deadline();
    if (!o.checkpoint.empty()) c.checkpoint_path = o.checkpoint;
    if (o.progress) {
        c.on_progress = [](const SearchProgress& p) {
            nlohmann::json j{{"pebbles", p.pebbles},
                             {"candidates", p.candidates},
                             {"branches_done", p.branches_done},
                             {"branches_total", p.branches_total},
                             {"best", p.best ? nlohmann::json(p.best->to_string()) : nlohmann::json()}};
            std::cerr << j.dump() << std::endl;
        };
    }
    return c;
}

// Verify suites print one line per claim and return the failure count.
struct Reporter {
    std::ostream& out;
    int failures = 0;
    void claim(bool ok, const std::string& name, const std::string& detail) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << '\n';
        failures += ok ? 0 : 1;
    }
};

void verify_edge_counts(const Options& o, Reporter& rep) {
    const auto n = range_or(o.n_range, {1, 5});
    const auto report = verify_edge_count_props(static_cast<std::size_t>(n.hi), search_control(o));
    int complete = 0, near = 0, power = 0;
    for (const auto& e : report.entries) {
        complete += e.prop_complete ? 0 : 1;
        near += e.prop_near ? 0 : 1;
        power += e.prop_power ? 0 : 1;
        if (!e.ok()) {
            rep.out << "  counterexample: n=" << e.graph.vertex_count() << " edges=" << e.graph.edge_count()
                    << " wp=" << e.wp << " weights " << join(e.witness.weights) << '\n';
        }
    }
    const std::string of = " of " + std::to_string(report.entries.size()) + " graphs";
    rep.claim(complete == 0, "wp = 1 iff |E| >= 2n-2", std::to_string(complete) + " violations" + of);
    rep.claim(near == 0, "|E| = 2n-3 implies wp = 2", std::to_string(near) + " violations" + of);
    rep.claim(power == 0, "|E| = 2n-2-k implies wp <= 2^k", std::to_string(power) + " violations" + of);
}

void verify_stars(const Options& o, Reporter& rep) {
    const auto k = range_or(o.k_range, {2, 4});
    for (std::int64_t leaves = k.lo; leaves <= k.hi; ++leaves) {
        const auto res = weighted_pebbling_number(star_graph(static_cast<std::size_t>(leaves)), search_control(o));
        rep.claim(res.value == leaves + 2, "star k=" + std::to_string(leaves),
                  "wp " + std::to_string(res.value) + ", expected " + std::to_string(leaves + 2) + ", weights " +
                      join(res.witness.weights));
    }
}

void verify_p2(const Options& o, Reporter& rep) {
    const auto p = range_or(o.p_range, {1, 200});
    int bad = 0;
    for (std::int64_t q = p.lo; q <= p.hi; ++q) {
        const Rational closed = wp2_closed_form(q);
        const Rational searched = path_weight_search(2, q).weight;
        const Rational brute = std::min(f_min(q).value, g_min(q).value);
        if (closed != searched || closed != brute) {
            ++bad;
            rep.out << "  p=" << q << ": closed form " << closed << ", search " << searched << ", min(f, g) " << brute
                    << '\n';
        }
    }
    rep.claim(bad == 0, "two-edge closed form p=" + p.to_string(), std::to_string(bad) + " mismatches");
}

void verify_two_edge_bounds(const Options& o, Reporter& rep) {
    const auto p = range_or(o.p_range, {1, 500});
    int f_bad = 0, g_bad = 0;
    for (std::int64_t q = p.lo; q <= p.hi; ++q) {
        const auto f = f_min(q);
        const auto g = g_min(q);
        if (!f.agrees()) {
            ++f_bad;
            rep.out << "  f p=" << q << ": " << f.value << " vs " << f.closed_form << '\n';
        }
        if (!g.satisfied()) {
            ++g_bad;
            rep.out << "  g p=" << q << ": " << g.value << " vs case " << g.piece << " bound " << g.piece_bound
                    << '\n';
        }
    }
    rep.claim(f_bad == 0, "f_min closed form p=" + p.to_string(), std::to_string(f_bad) + " mismatches");
    rep.claim(g_bad == 0, "g_min piecewise bounds p=" + p.to_string(), std::to_string(g_bad) + " violations");
}

void verify_chung(const Options& o, Reporter& rep) {
    const auto n = range_or(o.n_range, {1, 7});
    for (std::int64_t v = n.lo; v <= n.hi; ++v) {
        int bad = 0;
        const auto ts = trees(static_cast<std::size_t>(v));
        for (const auto& t : ts) {
            const auto exact = pebbling_number(t);
            if (exact != ExtCount(chung_number(t))) {
                ++bad;
                rep.out << "  tree " << canonical_tree_code(t) << ": formula " << chung_number(t) << ", solver "
                        << exact.to_string() << '\n';
            }
        }
        rep.claim(bad == 0, "chung n=" + std::to_string(v),
                  std::to_string(ts.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(ts.size()) +
                      " trees agree");
    }
}

// Rough size of the unsolvable down-set for the worst target.
double downset_estimate(const WeightedGraph& tree) {
    const std::size_t n = tree.vertex_count();
    double worst = 0;
    for (Vertex t = 0; t < n; ++t) {
        std::vector<std::int64_t> req(n, 0);
        req[t] = 1;
        std::vector<Vertex> stack{t};
        double product = 1;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (auto i : tree.incident(x)) {
                const auto& e = tree.edge(i);
                const Vertex y = e.u == x ? e.v : e.u;
                if (req[y] != 0) continue;
                req[y] = ceil_div(req[x], e.weight);
                product *= static_cast<double>(req[y]);
                stack.push_back(y);
            }
        }
        for (std::size_t k = 2; k < n; ++k) product /= static_cast<double>(k);
        worst = std::max(worst, product);
    }
    return worst;
}

void verify_tree_formula(const Options& o, Reporter& rep) {
    const auto n = range_or(o.n_range, {1, 6});
    const std::int64_t samples = o.samples.value_or(20);
    const std::vector<Rational> values{{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1}};
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    std::int64_t checked = 0, bad = 0, above = 0;
    for (std::int64_t v = n.lo; v <= n.hi; ++v) {
        for (const auto& t : trees(static_cast<std::size_t>(v))) {
            for (std::int64_t s = 0; s < (v == 1 ? 1 : samples); ++s) {
                WeightedGraph g;
                do {
                    std::vector<Rational> w;
                    for (std::size_t i = 0; i < t.edge_count(); ++i) w.push_back(values[pick(rng)]);
                    g = t.with_weights(w);
                } while (downset_estimate(g) > 2e5);
                for (Vertex target = 0; target < g.vertex_count(); ++target) {
                    ++checked;
                    const std::int64_t formula = tree_wp_target(g, target);
                    const ExtCount exact = pebbling_number(g, target);
                    if (exact == ExtCount(formula)) continue;
                    ++bad;
                    above += exact < ExtCount(formula) ? 1 : 0;
                    rep.out << "  target " << target << " edges";
                    for (const auto& e : g.edges()) rep.out << ' ' << e.u << '-' << e.v << '(' << e.weight << ')';
                    rep.out << ": formula " << formula << ", solver " << exact.to_string() << '\n';
                }
            }
        }
    }
    rep.claim(above == 0, "formula is a lower bound", std::to_string(above) + " of " + std::to_string(checked) +
                                                            " targets exceed the solver");
    rep.claim(bad == 0, "formula equals solver", std::to_string(bad) + " of " + std::to_string(checked) +
                                                     " targets differ (seed " + std::to_string(o.seed) + ")");
}

}  // namespace

Range Range::parse(std::string_view text) {
    Range r;
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad range '" + std::string(text) + "'");
    return r;
}

std::string Range::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

std::optional<std::chrono::steady_clock::time_point> Options::deadline() const {
    if (!budget) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*budget));
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto g = read_graph_file(require(o.graph, "--graph"));
    const auto c = read_configuration_file(require(o.config, "--config"), g);
    const Vertex t = g.id(require(o.target, "--target"));
    const auto cert = is_solvable(g.graph, c, t);
    if (!cert.solvable) {
        out << "UNSOLVABLE\n";
        return kNegative;
    }
    out << "SOLVABLE\n";
    for (const auto& m : cert.moves) out << format_move(m, g) << '\n';
    return kOk;
}

int cmd_pebbling_number(const Options& o, std::ostream& out) {
    const auto g = read_graph_file(require(o.graph, "--graph"));
    const ExtCount p = o.target.empty() ? pebbling_number(g.graph) : pebbling_number(g.graph, g.id(o.target));
    out << p.to_string() << '\n';
    return p.is_finite() ? kOk : kNegative;
}

int cmd_p_solvable(const Options& o, std::ostream& out) {
    const auto g = read_graph_file(require(o.graph, "--graph"));
    const auto res = is_p_solvable(g.graph, require_pebbles(o));
    if (res.solvable) {
        out << "P-SOLVABLE\n";
        return kOk;
    }
    out << "NOT P-SOLVABLE\n";
    if (res.witness) {
        out << "configuration:";
        for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
            out << ' ' << g.names[v] << ':' << res.witness->configuration[v];
        }
        out << "\ntarget: " << g.names[res.witness->target] << '\n';
    }
    return kNegative;
}

int cmd_tree_wp(const Options& o, std::ostream& out) {
    const auto g = read_graph_file(require(o.graph, "--graph"));
    if (!g.graph.is_tree()) throw std::invalid_argument("graph is not a tree");
    if (o.target.empty()) {
        out << tree_wp(g.graph).to_string() << '\n';
        return kOk;
    }
    const auto part = max_path_partition(g.graph, g.id(o.target));
    for (const auto& path : part.paths) {
        out << "path";
        for (auto v : path.vertices) out << ' ' << g.names[v];
        out << " requirement " << path.requirement << '\n';
    }
    out << "value " << part.value() << '\n';
    return kOk;
}

int cmd_min_weight(const Options& o, std::ostream& out) {
    const auto g = read_graph_file(require(o.graph, "--graph"));
    const auto res = min_weight_function(g.graph, require_pebbles(o), search_control(o));
    if (!res) {
        out << "no distribution\n";
        return kNegative;
    }
    out << "min weight: " << res->value << '\n';
    print_weights(out, g, res->witness.weights);
    return kOk;
}

int cmd_wp(const Options& o, std::ostream& out) {
    const auto g = read_graph_file(require(o.graph, "--graph"));
    if (!g.graph.is_connected_topology()) {
        out << "inf\n";
        return kNegative;
    }
    const auto res = weighted_pebbling_number(g.graph, search_control(o));
    out << "wp: " << res.value << '\n' << "total: " << res.witness.total << '\n';
    print_weights(out, g, res.witness.weights);
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    const auto deadline = o.deadline();
    const bool path = o.kind == "path-weights";
    if (!path && o.kind != "one-way") throw std::invalid_argument("unknown table kind '" + o.kind + "'");
    const Range cols = path ? range_or(o.n_range, {2, 3}) : range_or(o.k_range, {3, 6});
    const Range rows = range_or(o.p_range, path ? Range{1, 12} : Range{8, 15});
    const std::int64_t length = o.length.value_or(2);
    out << 'p';
    for (std::int64_t c = cols.lo; c <= cols.hi; ++c) out << (path ? ",n=" : ",k=") << c;
    out << '\n';
    for (std::int64_t p = rows.lo; p <= rows.hi; ++p) {
        if (past(deadline)) {
            out.flush();
            std::cerr << "budget exhausted before row p=" << p << '\n';
            return kBudget;
        }
        out << p;
        for (std::int64_t c = cols.lo; c <= cols.hi; ++c) {
            out << ',';
            if (path) {
                out << path_weight_search(c, p).weight;
            } else if (auto r = one_way_weight(p, length, c)) {
                out << r->weight;
            }
        }
        out << '\n';
    }
    return kOk;
}

int cmd_bound_compare(const Options& o, std::ostream& out) {
    const auto deadline = o.deadline();
    const Range ns = range_or(o.n_range, {1, 7});
    const Range ps = range_or(o.p_range, {1, 40});
    out << "n,p,exact,bound,gap_sign,gap,exact_approx,bound_approx,gap_approx\n";
    int status = kOk;
    for (std::int64_t n = ns.lo; n <= ns.hi; ++n) {
        for (std::int64_t p = ps.lo; p <= ps.hi; ++p) {
            if (past(deadline)) {
                out.flush();
                std::cerr << "budget exhausted before n=" << n << " p=" << p << '\n';
                return kBudget;
            }
            const Rational exact = path_weight_search(n, p).weight;
            const auto lb = path_lower_bound(n, p);
            const auto cmp = lb.compare(exact);
            const char* sign = cmp == 0 ? "0" : cmp < 0 ? "+" : "-";
            if (cmp > 0) status = kNegative;
            const auto bound_exact = lb.exact();
            out << n << ',' << p << ',' << exact << ',' << lb.symbolic() << ',' << sign << ','
                << (bound_exact ? (exact - *bound_exact).to_string() : "") << ',' << decimal(approx(exact)) << ','
                << decimal(lb.approx()) << ',' << decimal(approx(exact) - lb.approx()) << '\n';
        }
    }
    return status;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Reporter rep{out};
    if (o.suite == "edge-count-props") {
        verify_edge_counts(o, rep);
    } else if (o.suite == "star") {
        verify_stars(o, rep);
    } else if (o.suite == "p2-closed-form") {
        verify_p2(o, rep);
    } else if (o.suite == "two-edge-bounds") {
        verify_two_edge_bounds(o, rep);
    } else if (o.suite == "chung") {
        verify_chung(o, rep);
    } else if (o.suite == "tree-formula") {
        verify_tree_formula(o, rep);
    } else {
        throw std::invalid_argument("unknown suite '" + o.suite + "'");
    }
    out << (rep.failures == 0 ? "PASS" : "FAIL") << '\n';
    return rep.failures == 0 ? kOk : kNegative;
}

}  // namespace wpeb::cli
