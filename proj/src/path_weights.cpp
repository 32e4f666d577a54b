// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/path_weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpeb/solver.hpp"
#include "wpeb/weight_search.hpp"

namespace wpeb {

WeightAssignment WeightAssignment::of(std::vector<Rational> weights) {
    WeightAssignment a{std::move(weights), Rational(0)};
    for (const auto& w : a.weights) a.total += w;
    return a;
}

WeightedGraph path_graph(const std::vector<Rational>& weights) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), weights[i]});
    }
    return {weights.size() + 1, std::move(edges)};
}

namespace {

// Ratio a/b for 1 <= a <= b <= p, precomputed.
class Ratios {
public:
    explicit Ratios(std::int64_t p) : p_(p), table_(static_cast<std::size_t>(p * p)) {
        for (std::int64_t b = 1; b <= p; ++b) {
            for (std::int64_t a = 1; a <= b; ++a) table_[index(a, b)] = Rational(a, b);
        }
    }
    [[nodiscard]] const Rational& operator()(std::int64_t a, std::int64_t b) const { return table_[index(a, b)]; }

private:
    [[nodiscard]] std::size_t index(std::int64_t a, std::int64_t b) const {
        return static_cast<std::size_t>((a - 1) * p_ + (b - 1));
    }
    std::int64_t p_;
    std::vector<Rational> table_;
};

// Best (cost, weight-prefix) reaching a DP state; ties go to the
// lexicographically smaller prefix, which keeps the final vector lexicographically
// smallest among minimizers.
struct Cell {
    bool set = false;
    Rational cost;
    std::vector<Rational> weights;
    std::vector<std::int64_t> fwd;
    std::vector<std::int64_t> bwd;

    [[nodiscard]] bool improved_by(const Rational& c, const std::vector<Rational>& prefix, const Rational& w) const {
        if (!set) return true;
        if (c != cost) return c < cost;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] != weights[i]) return prefix[i] < weights[i];
        }
        return w < weights.back();
    }

    void assign(const Cell& from, const Rational& c, const Rational& w) {
        set = true;
        cost = c;
        weights = from.weights;
        weights.push_back(w);
        fwd = from.fwd;
        bwd = from.bwd;
    }
};

void check_positive(std::int64_t x, const char* what) {
    if (x < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

std::optional<OneWayResult> one_way_weight(std::int64_t p, std::int64_t length, std::int64_t k) {
    check_positive(p, "p");
    check_positive(length, "path length");
    check_positive(k, "k");
    if (k > p) return std::nullopt;
    const Ratios ratio(p);
    // Layer cells indexed by pebble count m in [k, p].
    std::vector<Cell> layer(static_cast<std::size_t>(p + 1));
    layer[p].set = true;
    layer[p].fwd = {p};
    for (std::int64_t i = 1; i < length; ++i) {
        std::vector<Cell> next(static_cast<std::size_t>(p + 1));
        for (std::int64_t prev = k; prev <= p; ++prev) {
            const Cell& cell = layer[prev];
            if (!cell.set) continue;
            for (std::int64_t m = k; m <= prev; ++m) {
                const Rational& w = ratio(m, prev);
                Rational c = cell.cost + w;
                if (next[m].improved_by(c, cell.weights, w)) {
                    next[m].assign(cell, c, w);
                    next[m].fwd.push_back(m);
                }
            }
        }
        layer = std::move(next);
    }
    Cell best;
    for (std::int64_t prev = k; prev <= p; ++prev) {
        const Cell& cell = layer[prev];
        if (!cell.set) continue;
        const Rational& w = ratio(k, prev);
        Rational c = cell.cost + w;
        if (best.improved_by(c, cell.weights, w)) {
            best.assign(cell, c, w);
            best.fwd.push_back(k);
        }
    }
    return OneWayResult{best.cost, WeightAssignment::of(best.weights), best.fwd};
}

PathWeightResult path_weight_search(std::int64_t n, std::int64_t p, const PathSearchOptions& opts) {
    check_positive(n, "n");
    check_positive(p, "p");
    const Ratios ratio(p);
    auto idx = [p](std::int64_t m, std::int64_t q) { return static_cast<std::size_t>((m - 1) * p + (q - 1)); };
    // State after edge i: m = pebbles reaching vertex i moving forward from
    // vertex 0, q = pebbles present at vertex i moving backward from vertex n.
    std::vector<Cell> layer(static_cast<std::size_t>(p * p));
    layer[idx(p, 1)].set = true;
    for (std::int64_t i = 1; i < n; ++i) {
        std::vector<Cell> next(static_cast<std::size_t>(p * p));
        for (std::int64_t mp = 1; mp <= p; ++mp) {
            for (std::int64_t qp = 1; qp <= p; ++qp) {
                const Cell& cell = layer[idx(mp, qp)];
                if (!cell.set) continue;
                for (std::int64_t m = 1; m <= mp; ++m) {
                    const Rational& fw = ratio(m, mp);
                    for (std::int64_t q = qp; q <= p; ++q) {
                        const Rational& bw = ratio(qp, q);
                        const Rational& w = fw < bw ? bw : fw;
                        Rational c = cell.cost + w;
                        Cell& dst = next[idx(m, q)];
                        if (dst.improved_by(c, cell.weights, w)) {
                            dst.assign(cell, c, w);
                            dst.fwd.push_back(m);
                            dst.bwd.push_back(q);
                        }
                    }
                }
            }
        }
        layer = std::move(next);
    }
    Cell best;
    for (std::int64_t mp = 1; mp <= p; ++mp) {
        for (std::int64_t qp = 1; qp <= p; ++qp) {
            const Cell& cell = layer[idx(mp, qp)];
            if (!cell.set) continue;
            const Rational& fw = ratio(1, mp);
            const Rational& bw = ratio(qp, p);
            const Rational& w = fw < bw ? bw : fw;
            Rational c = cell.cost + w;
            if (best.improved_by(c, cell.weights, w)) best.assign(cell, c, w);
        }
    }

    PathWeightResult out;
    out.weight = best.cost;
    out.witness = WeightAssignment::of(best.weights);
    out.forward_profile.push_back(p);
    out.forward_profile.insert(out.forward_profile.end(), best.fwd.begin(), best.fwd.end());
    out.forward_profile.push_back(1);
    out.backward_profile.push_back(1);
    out.backward_profile.insert(out.backward_profile.end(), best.bwd.begin(), best.bwd.end());
    out.backward_profile.push_back(p);

    if (opts.verify) {
        out.verified = is_p_solvable(path_graph(out.witness.weights), p).solvable;
        if (!out.verified) {
            std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
            auto grid = min_weight_function(path_graph(ones), p);
            if (!grid) throw std::logic_error("grid search found no distribution for a path");
            out.weight = grid->value;
            out.witness = WeightAssignment::of(grid->witness.weights);
            out.verified = true;
            out.escalated = true;
        }
    }
    return out;
}

namespace {

std::int64_t isqrt(std::int64_t p) {
    std::int64_t lo = 0;
    std::int64_t hi = std::min<std::int64_t>(p, 3'037'000'499) + 1;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (mid * mid <= p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

Rational wp2_closed_form(std::int64_t p) {
    check_positive(p, "p");
    const std::int64_t n = isqrt(p);
    const std::int64_t h = n / 2;
    const std::int64_t sq = n * n;
    if (p <= sq + h) return {2, n};
    if (p <= sq + 2 * h) return {2 * n + 1, p};
    if (p <= sq + n + h) return {2 * n + 1, n * (n + 1)};
    return {2 * n + 2, p};
}

FMinResult f_min(std::int64_t p) {
    check_positive(p, "p");
    FMinResult out;
    std::int64_t best_sum = 0;
    for (std::int64_t a = 1; a <= p; ++a) {
        for (std::int64_t b = a; b <= p; ++b) {
            if (a * b < p) continue;
            if (best_sum == 0 || a + b < best_sum) {
                best_sum = a + b;
                out.a = a;
                out.b = b;
            }
        }
    }
    out.value = Rational(best_sum, p);
    const std::int64_t n = isqrt(p);
    std::int64_t closed = 2 * n + 2;
    if (p == n * n) {
        closed = 2 * n;
    } else if (p <= n * n + n) {
        closed = 2 * n + 1;
    }
    out.closed_form = Rational(closed, p);
    return out;
}

GMinResult g_min(std::int64_t p) {
    check_positive(p, "p");
    GMinResult out;
    // (a+b)/(ab) compared by cross multiplication.
    std::int64_t best_num = 0;
    std::int64_t best_den = 1;
    for (std::int64_t a = 1; a <= p; ++a) {
        for (std::int64_t b = a; b <= p && a * b <= p; ++b) {
            const std::int64_t num = a + b;
            const std::int64_t den = a * b;
            if (best_num == 0 || num * best_den < best_num * den) {
                best_num = num;
                best_den = den;
                out.a = a;
                out.b = b;
            }
        }
    }
    out.value = Rational(best_num, best_den);
    const std::int64_t n = isqrt(p);
    const std::int64_t h = n / 2;
    const std::int64_t sq = n * n;
    if (p <= sq + h) {
        out.piece = 1;
        out.piece_bound = Rational(2, n);
        out.equality_case = true;
    } else if (p <= sq + 2 * h) {
        out.piece = 2;
        out.piece_bound = Rational(2 * n + 1, p);
    } else if (p <= sq + n + h) {
        out.piece = 3;
        out.piece_bound = Rational(2 * n + 1, n * (n + 1));
        out.equality_case = true;
    } else {
        out.piece = 4;
        out.piece_bound = Rational(2 * n + 2, p);
    }
    return out;
}

Rational p3_bound_at(std::int64_t p, std::int64_t k) {
    check_positive(p, "p");
    check_positive(k, "k");
    const std::int64_t c = (p + k - 1) / k;
    return Rational(2 * c, p) + Rational(k, c);
}

P3UpperBound p3_upper_bound(std::int64_t p) {
    check_positive(p, "p");
    P3UpperBound out;
    for (std::int64_t k = 1; k <= p; ++k) {
        Rational v = p3_bound_at(p, k);
        if (k == 1 || v < out.value) {
            out.value = v;
            out.best_k = k;
        }
    }
    std::int64_t k = 1;
    while (checked_mul(checked_mul(k, k + 1), 2 * k + 1) < 2 * p) ++k;
    out.cubic_k = std::min(k, p);
    out.value_at_cubic_k = p3_bound_at(p, out.cubic_k);
    return out;
}

std::optional<std::int64_t> exact_root(std::int64_t p, std::int64_t n) {
    check_positive(p, "p");
    check_positive(n, "n");
    using boost::multiprecision::cpp_int;
    for (std::int64_t m = 1;; ++m) {
        cpp_int power = boost::multiprecision::pow(cpp_int(m), static_cast<unsigned>(n));
        if (power == p) return m;
        if (power > p) return std::nullopt;
    }
}

PathLowerBound::PathLowerBound(std::int64_t n, std::int64_t p) : n_(n), p_(p) {
    check_positive(n, "n");
    check_positive(p, "p");
}

PathLowerBound path_lower_bound(std::int64_t n, std::int64_t p) { return {n, p}; }

std::optional<Rational> PathLowerBound::exact() const {
    auto m = exact_root(p_, n_);
    if (!m) return std::nullopt;
    return Rational(n_, *m);
}

std::strong_ordering PathLowerBound::compare(const Rational& q) const {
    if (q < Rational(0)) throw std::invalid_argument("compare against a negative value");
    using boost::multiprecision::cpp_int;
    const auto e = static_cast<unsigned>(n_);
    cpp_int lhs = boost::multiprecision::pow(cpp_int(n_), e) * boost::multiprecision::pow(cpp_int(q.den()), e);
    cpp_int rhs = boost::multiprecision::pow(cpp_int(q.num()), e) * cpp_int(p_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string PathLowerBound::symbolic() const {
    if (auto e = exact()) return e->to_string();
    return std::to_string(n_) + "/" + std::to_string(p_) + "^(1/" + std::to_string(n_) + ")";
}

double PathLowerBound::approx() const {
    return static_cast<double>(n_) / std::pow(static_cast<double>(p_), 1.0 / static_cast<double>(n_));
}

}  // namespace wpeb
