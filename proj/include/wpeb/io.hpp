// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wpeb/graph.hpp"

namespace wpeb {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] const std::string& source() const { return source_; }

private:
    std::string source_;
    std::size_t line_;
};

/// Graph with vertex names; ids follow the order of first appearance.
struct NamedGraph {
    WeightedGraph graph;
    std::vector<std::string> names;

    [[nodiscard]] std::optional<Vertex> find(std::string_view name) const;
    /// Throws std::invalid_argument for an unknown name.
    [[nodiscard]] Vertex id(std::string_view name) const;
};

/// One edge per line as `u v weight` (weight a fraction or integer); a line with
/// a single name declares a vertex. `#` starts a comment.
[[nodiscard]] NamedGraph parse_graph(std::istream& in, const std::string& source = "<graph>");
[[nodiscard]] NamedGraph read_graph_file(const std::string& path);

/// Whitespace- or comma-separated `name:count` tokens; unlisted vertices hold 0.
[[nodiscard]] Configuration parse_configuration(std::istream& in, const NamedGraph& g,
                                                const std::string& source = "<config>");
[[nodiscard]] Configuration read_configuration_file(const std::string& path, const NamedGraph& g);

/// "u -> v: remove k, deliver m" per move, with vertex names.
[[nodiscard]] std::string format_move(const MoveStep& m, const NamedGraph& g);

}  // namespace wpeb
