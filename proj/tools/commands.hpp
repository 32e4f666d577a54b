// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace wpeb::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Inclusive integer range written "A..B" (or a single "A").
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    static Range parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;
};

struct Options {
    std::string graph;
    std::string config;
    std::string target;
    std::string out;
    std::string checkpoint;
    std::string kind;   ///< table kind
    std::string suite;  ///< verify suite
    std::optional<std::int64_t> pebbles;
    std::optional<std::int64_t> grid_denominator;
    std::optional<std::int64_t> length;
    std::optional<std::int64_t> samples;
    std::optional<std::string> n_range;
    std::optional<std::string> p_range;
    std::optional<std::string> k_range;
    std::optional<double> budget;
    std::uint64_t seed = 1;
    bool progress = false;

    [[nodiscard]] std::optional<std::chrono::steady_clock::time_point> deadline() const;
};

int cmd_solve(const Options& o, std::ostream& out);
int cmd_pebbling_number(const Options& o, std::ostream& out);
int cmd_p_solvable(const Options& o, std::ostream& out);
int cmd_tree_wp(const Options& o, std::ostream& out);
int cmd_min_weight(const Options& o, std::ostream& out);
int cmd_wp(const Options& o, std::ostream& out);
int cmd_table(const Options& o, std::ostream& out);
int cmd_bound_compare(const Options& o, std::ostream& out);
int cmd_verify(const Options& o, std::ostream& out);

}  // namespace wpeb::cli
