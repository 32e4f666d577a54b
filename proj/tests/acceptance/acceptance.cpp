// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. An optional argument names the JSON manifest to write.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "reference_tables.hpp"
#include "support/naive_solver.hpp"
#include "support/properties.hpp"
#include "support/random_graphs.hpp"
#include "wpeb/enumerate.hpp"
#include "wpeb/path_weights.hpp"
#include "wpeb/solver.hpp"
#include "wpeb/tree.hpp"
#include "wpeb/weight_search.hpp"

namespace {

using namespace wpeb;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240611;
constexpr std::int64_t kPropertyCases = 10'000;

struct Verdict {
    bool pass = false;
    std::string detail;
    std::vector<std::string> notes;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Verdict()> run;
};

std::string seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
}

// Cells of the first table inside the acceptance range.
struct Cell {
    std::int64_t n;
    std::int64_t p;
    std::string expected;
    Rational computed;
};

std::vector<Cell>& path_weight_cells() {
    static std::vector<Cell> cells;
    return cells;
}

Verdict path_weight_table() {
    Verdict v;
    auto& cells = path_weight_cells();
    cells.clear();
    int bad = 0;
    for (const auto& row : reference::kPathWeights) {
        for (std::int64_t n = 2; n <= 7; ++n) {
            const bool in_range = n <= 3 ? row.p <= 40 : row.p <= 12;
            if (!in_range) continue;
            const std::string expected(row.by_n[static_cast<std::size_t>(n - 2)]);
            const auto r = path_weight_search(n, row.p);
            cells.push_back({n, row.p, expected, r.weight});
            if (r.escalated) v.notes.push_back("escalated to grid search at n=" + std::to_string(n) + " p=" +
                                               std::to_string(row.p));
            if (r.weight.to_string() != expected) {
                ++bad;
                v.notes.push_back("n=" + std::to_string(n) + " p=" + std::to_string(row.p) + ": computed " +
                                  r.weight.to_string() + ", table " + expected);
            }
        }
    }
    // Outside the gated range; reported for the record.
    const auto typo = path_weight_search(5, 31).weight;
    v.notes.push_back("discrepancy outside range: n=5 p=31 table \"15//62\", computed " + typo.to_string());
    v.pass = bad == 0 && cells.size() == 2 * 40 + 4 * 12;
    v.detail = std::to_string(cells.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(cells.size()) +
               " cells exact";
    return v;
}

Verdict one_way_table() {
    Verdict v;
    int good = 0;
    int total = 0;
    for (const auto& row : reference::kOneWay) {
        for (std::int64_t k = 3; k <= 6; ++k) {
            ++total;
            const std::string expected(row.by_k[static_cast<std::size_t>(k - 3)]);
            const auto r = one_way_weight(row.p, 2, k);
            if (r && r->weight.to_string() == expected) {
                ++good;
            } else {
                v.notes.push_back("p=" + std::to_string(row.p) + " k=" + std::to_string(k) + ": computed " +
                                  (r ? r->weight.to_string() : "none") + ", table " + expected);
            }
        }
    }
    v.pass = good == 32 && total == 32;
    v.detail = std::to_string(good) + "/" + std::to_string(total) + " cells exact";
    return v;
}

Verdict closed_form() {
    Verdict v;
    int good = 0;
    for (std::int64_t p = 1; p <= 200; ++p) {
        const Rational cf = wp2_closed_form(p);
        const Rational dp = path_weight_search(2, p).weight;
        const Rational fg = std::min(f_min(p).value, g_min(p).value);
        if (cf == dp && dp == fg) {
            ++good;
        } else {
            v.notes.push_back("p=" + std::to_string(p) + ": closed " + cf.to_string() + ", search " + dp.to_string() +
                              ", min(f,g) " + fg.to_string());
        }
    }
    v.pass = good == 200;
    v.detail = std::to_string(good) + "/200 values of p agree three ways";
    return v;
}

Verdict two_edge_bounds() {
    Verdict v;
    int f_ok = 0;
    int g_ok = 0;
    for (std::int64_t p = 1; p <= 500; ++p) {
        const auto f = f_min(p);
        const auto g = g_min(p);
        if (f.agrees()) {
            ++f_ok;
        } else {
            v.notes.push_back("f p=" + std::to_string(p) + ": " + f.value.to_string() + " vs " + f.closed_form.to_string());
        }
        if (g.satisfied()) {
            ++g_ok;
        } else {
            v.notes.push_back("g p=" + std::to_string(p) + " case " + std::to_string(g.piece) + ": " +
                              g.value.to_string() + " vs " + g.piece_bound.to_string());
        }
    }
    v.pass = f_ok == 500 && g_ok == 500;
    v.detail = "f closed form " + std::to_string(f_ok) + "/500, g piecewise " + std::to_string(g_ok) + "/500";
    return v;
}

// Rough size of the down-set of unsolvable configurations for the worst
// target; keeps the brute force at desk scale.
double downset_estimate(const WeightedGraph& tree) {
    const std::size_t n = tree.vertex_count();
    std::vector<std::vector<std::pair<Vertex, Rational>>> adj(n);
    for (const auto& e : tree.edges()) {
        adj[e.u].push_back({e.v, e.weight});
        adj[e.v].push_back({e.u, e.weight});
    }
    double worst = 0;
    for (Vertex t = 0; t < n; ++t) {
        // Requirements toward t along the unique paths.
        std::vector<std::int64_t> req(n, 0);
        req[t] = 1;
        std::vector<Vertex> stack{t};
        std::vector<bool> seen(n, false);
        seen[t] = true;
        double product = 1;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (const auto& [y, w] : adj[x]) {
                if (seen[y]) continue;
                seen[y] = true;
                req[y] = ceil_div(req[x], w);
                product *= static_cast<double>(req[y]);
                stack.push_back(y);
            }
        }
        for (std::size_t k = 2; k < n; ++k) product /= static_cast<double>(k);
        worst = std::max(worst, product);
    }
    return worst;
}

Verdict tree_formula() {
    Verdict v;
    testing::Rng rng(kSeed);
    const std::vector<Rational> values{Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                       Rational(2, 3), Rational(3, 4), Rational(1)};
    int samples = 0;
    int redrawn = 0;
    int checks = 0;
    int bad = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& shape : trees(n)) {
            const int wanted = n == 1 ? 1 : 20;
            for (int got = 0; got < wanted;) {
                std::vector<Rational> w;
                for (std::size_t i = 0; i < shape.edge_count(); ++i) w.push_back(testing::pick(rng, values));
                const auto t = shape.with_weights(w);
                if (downset_estimate(t) > 2e5) {
                    ++redrawn;
                    continue;
                }
                ++got;
                ++samples;
                for (Vertex target = 0; target < n; ++target) {
                    ++checks;
                    const std::int64_t formula = tree_wp_target(t, target);
                    const ExtCount brute = pebbling_number(t, target);
                    if (brute != ExtCount(formula)) {
                        ++bad;
                        std::ostringstream s;
                        s << "target " << target << ", edges";
                        for (const auto& e : t.edges()) s << ' ' << e.u << '-' << e.v << '(' << e.weight << ')';
                        const auto ties = partition_values_over_ties(t, target);
                        s << ": formula " << formula << ", solver " << brute.to_string() << ", formula over ties "
                          << *ties.begin() << ".." << *ties.rbegin();
                        if (const auto c = testing::naive_unsolvable(t, target, formula)) {
                            s << "; naive search confirms unsolvable size-" << formula << " configuration";
                            for (auto x : *c) s << ' ' << x;
                        }
                        v.notes.push_back(s.str());
                    }
                }
            }
        }
    }
    v.pass = bad == 0 && samples >= 200;
    v.detail = std::to_string(samples) + " weighted trees, " + std::to_string(checks) + " targets, " +
               std::to_string(bad) + " mismatches (" + std::to_string(redrawn) + " oversized draws redrawn)";
    return v;
}

Verdict chung() {
    Verdict v;
    int count = 0;
    int bad = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& t : trees(n)) {
            ++count;
            const std::int64_t formula = chung_number(t);
            const ExtCount brute = pebbling_number(t);
            if (brute != ExtCount(formula)) {
                ++bad;
                v.notes.push_back("tree code " + canonical_tree_code(t) + ": formula " + std::to_string(formula) +
                                  ", solver " + brute.to_string());
            }
        }
    }
    bool samples = true;
    for (std::size_t len = 1; len <= 6; ++len) samples = samples && chung_number(uniform_path(len)) == (1 << len);
    for (std::size_t k = 2; k <= 6; ++k) {
        samples = samples && chung_number(star_graph(k)) == static_cast<std::int64_t>(k) + 2;
    }
    v.pass = bad == 0 && samples;
    v.detail = std::to_string(count) + " trees on 1..7 vertices agree with the solver; paths 2^n, stars k+2: " +
               (samples ? "ok" : "FAILED");
    return v;
}

Verdict edge_counts() {
    Verdict v;
    const auto report = verify_edge_count_props(5);
    for (const auto* e : report.counterexamples()) {
        v.notes.push_back("counterexample: n=" + std::to_string(e->graph.vertex_count()) +
                          " |E|=" + std::to_string(e->graph.edge_count()) + " wp=" + std::to_string(e->wp));
    }
    v.pass = report.ok() && report.entries.size() == 1 + 1 + 2 + 6 + 21;
    v.detail = std::to_string(report.entries.size()) + " connected graphs, " +
               std::to_string(report.counterexamples().size()) + " counterexamples";
    return v;
}

Verdict stars() {
    Verdict v;
    v.pass = true;
    std::string values;
    for (std::size_t k = 2; k <= 4; ++k) {
        const auto g = star_graph(k);
        const auto r = weighted_pebbling_number(g);
        // Independent recheck of the witness with the solver.
        const ExtCount solver = pebbling_number(g.with_weights(r.witness.weights));
        const bool ok = r.value == static_cast<std::int64_t>(k) + 2 && solver == ExtCount(r.value) &&
                        r.witness.total == Rational(static_cast<std::int64_t>(k), 2);
        v.pass = v.pass && ok;
        values += (values.empty() ? "" : ", ") + std::string("S") + std::to_string(k) + "=" + std::to_string(r.value);
    }
    v.detail = values + " (witnesses rechecked by the solver)";
    return v;
}

Verdict lower_bound() {
    Verdict v;
    const auto& cells = path_weight_cells();
    int good = 0;
    int equalities = 0;
    for (const auto& c : cells) {
        const auto bound = path_lower_bound(c.n, c.p);
        const auto cmp = bound.compare(c.computed);
        const bool perfect = exact_root(c.p, c.n).has_value();
        const bool ok = cmp != std::strong_ordering::greater && ((cmp == std::strong_ordering::equal) == perfect);
        if (ok) {
            ++good;
            if (perfect) ++equalities;
        } else {
            v.notes.push_back("n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) + ": bound " +
                              bound.symbolic() + " vs " + c.computed.to_string());
        }
    }
    v.pass = !cells.empty() && good == static_cast<int>(cells.size());
    v.detail = std::to_string(good) + "/" + std::to_string(cells.size()) + " cells bounded, equality at exactly the " +
               std::to_string(equalities) + " perfect powers";
    return v;
}

Verdict special_tree() {
    Verdict v;
    // a-b-c-d-e with c-f; vertices a..f are 0..5, edge cf is index 4.
    const auto t = WeightedGraph::uniform(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    const auto grid = GridSpec::with_max_denominator(6);
    const auto r15 = required_edge_weights(t, 15, Rational(5, 2), grid);
    const auto r14 = required_edge_weights(t, 14, Rational(5, 2), grid);
    bool cf_third = !r15.matches.empty();
    for (const auto& m : r15.matches) cf_third = cf_third && m.weights[4] == Rational(1, 3);
    const bool none_below = r15.min_wp_seen == ExtCount(15) && r14.matches.empty();
    for (const auto& m : r15.matches) {
        std::string s = "wp-15 distribution (ab bc cd de cf):";
        for (const auto& w : m.weights) s += " " + w.to_string();
        v.notes.push_back(s);
    }
    v.pass = cf_third && none_below;
    v.detail = "verified on grid D=6: " + std::to_string(r15.enumerated) + " distributions of total 5/2, " +
               std::to_string(r15.matches.size()) + " with wp=15, min wp " + r15.min_wp_seen.to_string() +
               ", cf=1/3 in all: " + (cf_third ? "yes" : "no");
    return v;
}

Verdict properties() {
    Verdict v;
    const std::vector<std::pair<std::string, testing::PropertyOutcome>> suites{
        {"move conservation", testing::move_conservation(kSeed, kPropertyCases)},
        {"floor superadditivity", testing::floor_superadditivity(kSeed + 1, kPropertyCases)},
        {"pebble/weight monotonicity", testing::monotonicity(kSeed + 2, kPropertyCases)},
        {"certificate replay", testing::certificate_replay(kSeed + 3, kPropertyCases)},
    };
    v.pass = true;
    for (const auto& [name, o] : suites) {
        v.pass = v.pass && o.failures == 0 && o.cases == kPropertyCases;
        if (!v.detail.empty()) v.detail += ", ";
        v.detail += name + " " + std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases);
        if (o.failures) v.notes.push_back(name + ": " + o.first_failure);
    }
    v.detail += " (seed " + std::to_string(kSeed) + ")";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "path-weight table reproduction", 600, path_weight_table},
        {2, "one-way table reproduction", 1, one_way_table},
        {3, "two-edge closed form vs search vs min(f, g)", 60, closed_form},
        {4, "f/g bound checks", 60, two_edge_bounds},
        {5, "tree formula vs solver", 900, tree_formula},
        {6, "Chung's formula vs solver", 900, chung},
        {7, "edge-count propositions", 1800, edge_counts},
        {8, "star theorem", 1800, stars},
        {9, "path lower bound", 10, lower_bound},
        {10, "required weight 1/3 on the special tree", 3600, special_tree},
        {11, "property suites", 300, properties},
    };
    nlohmann::json manifest;
    manifest["command"] = "acceptance";
    manifest["seed"] = kSeed;
    manifest["property_cases"] = kPropertyCases;
    manifest["criteria"] = nlohmann::json::array();
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double took = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_budget = took <= c.budget_seconds;
        const bool pass = v.pass && in_budget;
        if (!pass) ++failed;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << " " << c.title << ": " << v.detail
                  << " (" << seconds(took) << ", budget " << seconds(c.budget_seconds)
                  << (in_budget ? "" : ", OVER BUDGET") << ")\n";
        for (const auto& note : v.notes) std::cout << "       " << note << '\n';
        std::cout.flush();
        manifest["criteria"].push_back(
            {{"id", c.id}, {"title", c.title}, {"pass", pass}, {"detail", v.detail}});
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED") << '\n';
    if (argc > 1) {
        std::ofstream out(argv[1]);
        out << manifest.dump(2) << '\n';
    }
    return failed == 0 ? 0 : 1;
}
