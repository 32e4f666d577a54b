// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wpeb/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wpeb {

ParseError::ParseError(std::string source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line) {}

std::optional<Vertex> NamedGraph::find(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<Vertex>(it - names.begin());
}

Vertex NamedGraph::id(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> tokens_of(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

}  // namespace

NamedGraph parse_graph(std::istream& in, const std::string& source) {
    NamedGraph out;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& name) {
        if (auto v = out.find(name)) return *v;
        out.names.push_back(name);
        return static_cast<Vertex>(out.names.size() - 1);
    };
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto t = tokens_of(line);
        if (t.empty()) continue;
        if (t.size() == 1) {
            intern(t[0]);
            continue;
        }
        if (t.size() != 3) throw ParseError(source, lineno, "expected 'u v weight'");
        if (t[0] == t[1]) throw ParseError(source, lineno, "self-loop on '" + t[0] + "'");
        Rational w;
        try {
            w = Rational::parse(t[2]);
        } catch (const std::exception& e) {
            throw ParseError(source, lineno, "bad weight '" + t[2] + "'");
        }
        if (w < Rational(0) || w > Rational(1)) throw ParseError(source, lineno, "weight outside [0, 1]");
        const Vertex u = intern(t[0]);
        const Vertex v = intern(t[1]);
        edges.push_back({u, v, w});
    }
    if (out.names.empty()) throw ParseError(source, lineno, "graph has no vertices");
    out.graph = WeightedGraph(out.names.size(), std::move(edges));
    return out;
}

NamedGraph read_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_graph(in, path);
}

Configuration parse_configuration(std::istream& in, const NamedGraph& g, const std::string& source) {
    Configuration c(g.graph.vertex_count());
    std::vector<bool> given(g.graph.vertex_count(), false);
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        for (const auto& tok : tokens_of(line)) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos) throw ParseError(source, lineno, "expected 'name:count', got '" + tok + "'");
            const std::string name = tok.substr(0, colon);
            const std::string count = tok.substr(colon + 1);
            auto v = g.find(name);
            if (!v) throw ParseError(source, lineno, "unknown vertex '" + name + "'");
            if (given[*v]) throw ParseError(source, lineno, "vertex '" + name + "' listed twice");
            std::int64_t k = 0;
            auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
            if (ec != std::errc() || ptr != count.data() + count.size() || k < 0) {
                throw ParseError(source, lineno, "bad count '" + count + "'");
            }
            given[*v] = true;
            c.set(*v, k);
        }
    }
    return c;
}

Configuration read_configuration_file(const std::string& path, const NamedGraph& g) {
    auto in = open_or_throw(path);
    return parse_configuration(in, g, path);
}

std::string format_move(const MoveStep& m, const NamedGraph& g) {
    return g.names.at(m.from) + " -> " + g.names.at(m.to) + ": remove " + std::to_string(m.removed) + ", deliver " +
           std::to_string(m.delivered);
}

}  // namespace wpeb
