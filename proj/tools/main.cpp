// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "wpeb/io.hpp"
#include "wpeb/weight_search.hpp"

namespace {

using wpeb::cli::Options;
using Handler = std::function<int(const Options&, std::ostream&)>;
using Json = nlohmann::json;

constexpr const char* kManifestFormat = "wpeb-manifest/1";

struct Command {
    const char* name;
    const char* help;
    Handler run;
    std::vector<std::string> flags;
    const char* positional = nullptr;
};

const std::vector<Command>& commands() {
    namespace c = wpeb::cli;
    static const std::vector<Command> list{
        {"solve", "Decide whether a configuration reaches a target", c::cmd_solve, {"graph", "config", "target"}},
        {"pebbling-number", "Pebbling number of a weighted graph", c::cmd_pebbling_number, {"graph", "target"}},
        {"p-solvable", "Check every configuration of --pebbles pebbles", c::cmd_p_solvable, {"graph", "pebbles"}},
        {"tree-wp", "Maximum path partition value of a weighted tree", c::cmd_tree_wp, {"graph", "target"}},
        {"min-weight",
         "Least total edge weight making the graph p-solvable",
         c::cmd_min_weight,
         {"graph", "pebbles", "grid-denominator", "budget", "checkpoint", "progress"}},
        {"wp",
         "Weighted pebbling number over distributions of total |E|/2",
         c::cmd_wp,
         {"graph", "grid-denominator", "budget", "checkpoint", "progress"}},
        {"table",
         "CSV table: path-weights (rows p, columns n) or one-way (rows p, columns k)",
         c::cmd_table,
         {"n-range", "p-range", "k-range", "length", "budget"},
         "kind"},
        {"bound-compare", "CSV of exact path weights against the lower bound", c::cmd_bound_compare,
         {"n-range", "p-range", "budget"}},
        {"verify",
         "Run a check suite: edge-count-props, star, p2-closed-form, two-edge-bounds, chung, tree-formula",
         c::cmd_verify,
         {"n-range", "p-range", "k-range", "samples", "seed", "grid-denominator", "budget"},
         "suite"},
    };
    return list;
}

void add_flag(CLI::App* sub, const std::string& flag, Options& o) {
    const std::string name = "--" + flag;
    if (flag == "graph") sub->add_option(name, o.graph, "Graph file: lines 'u v weight'");
    if (flag == "config") sub->add_option(name, o.config, "Configuration file: tokens 'name:count'");
    if (flag == "target") sub->add_option(name, o.target, "Target vertex name");
    if (flag == "pebbles") sub->add_option(name, o.pebbles, "Number of pebbles p");
    if (flag == "grid-denominator") sub->add_option(name, o.grid_denominator, "Largest weight denominator searched");
    if (flag == "budget") sub->add_option(name, o.budget, "Wall-clock budget in seconds");
    if (flag == "checkpoint") sub->add_option(name, o.checkpoint, "Checkpoint file for resumable searches");
    if (flag == "progress") sub->add_flag(name, o.progress, "Progress as JSON lines on stderr");
    if (flag == "n-range") sub->add_option(name, o.n_range, "Range A..B");
    if (flag == "p-range") sub->add_option(name, o.p_range, "Range A..B");
    if (flag == "k-range") sub->add_option(name, o.k_range, "Range A..B");
    if (flag == "length") sub->add_option(name, o.length, "One-way path length");
    if (flag == "samples") sub->add_option(name, o.samples, "Samples per tree");
    if (flag == "seed") sub->add_option(name, o.seed, "Random seed");
}

// Inputs, outputs, seed and budget get their own manifest fields; everything
// else is a parameter.
Json manifest_for(const std::string& name, CLI::App* sub) {
    Json m{{"format", kManifestFormat}, {"command", name}, {"inputs", Json::object()},
           {"parameters", Json::object()}, {"outputs", Json::object()}, {"seed", nullptr}, {"budget", nullptr}};
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0) continue;
        const std::string key = opt->get_positional() ? opt->get_name() : opt->get_lnames().front();
        if (key == "help" || key == "write-manifest") continue;
        const auto& res = opt->results();
        const Json value = res.empty() ? Json(true) : Json(res.front());
        if (key == "graph" || key == "config") {
            m["inputs"][key] = value;
        } else if (key == "out") {
            m["outputs"][key] = value;
        } else if (key == "seed" || key == "budget") {
            m[key] = value;
        } else {
            m["parameters"][key] = value;
        }
    }
    return m;
}

std::vector<std::string> args_from_manifest(const Json& m) {
    if (m.value("format", "") != kManifestFormat) throw std::invalid_argument("not a wpeb manifest");
    const std::string name = m.at("command").get<std::string>();
    std::vector<std::string> args{"wpeb", name};
    const Command* cmd = nullptr;
    for (const auto& c : commands()) {
        if (name == c.name) cmd = &c;
    }
    if (cmd == nullptr) throw std::invalid_argument("unknown command '" + name + "' in manifest");
    auto add = [&](const std::string& key, const Json& v) {
        if (cmd->positional != nullptr && key == cmd->positional) {
            args.insert(args.begin() + 2, v.get<std::string>());
        } else if (v.is_boolean()) {
            if (v.get<bool>()) args.push_back("--" + key);
        } else {
            args.push_back("--" + key);
            args.push_back(v.get<std::string>());
        }
    };
    for (const char* section : {"inputs", "parameters", "outputs"}) {
        const Json entries = m.value(section, Json::object());
        for (const auto& [k, v] : entries.items()) add(k, v);
    }
    for (const char* key : {"seed", "budget"}) {
        if (m.contains(key) && !m[key].is_null()) add(key, m[key]);
    }
    return args;
}

int dispatch(std::vector<std::string> args);

int run_parsed(const Command& cmd, CLI::App* sub, const Options& o, const std::string& write_manifest) {
    if (!write_manifest.empty()) {
        std::ofstream f(write_manifest);
        if (!f) throw std::runtime_error("cannot write " + write_manifest);
        f << manifest_for(cmd.name, sub).dump(2) << '\n';
    }
    if (o.out.empty()) return cmd.run(o, std::cout);
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    return cmd.run(o, f);
}

int dispatch(std::vector<std::string> args) {
    CLI::App app{"Weighted graph pebbling: solver, weight searches and tables", "wpeb"};
    app.require_subcommand(1);
    Options o;
    std::string write_manifest;
    std::string manifest;
    const Command* chosen = nullptr;
    CLI::App* chosen_sub = nullptr;
    for (const auto& cmd : commands()) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        if (cmd.positional != nullptr) {
            std::string& slot = std::string(cmd.positional) == "kind" ? o.kind : o.suite;
            sub->add_option(cmd.positional, slot)->required();
        }
        for (const auto& flag : cmd.flags) add_flag(sub, flag, o);
        sub->add_option("--out", o.out, "Write output here instead of stdout");
        sub->add_option("--write-manifest", write_manifest, "Record this invocation as a JSON run manifest");
        sub->callback([&, sub, c = &cmd] {
            chosen = c;
            chosen_sub = sub;
        });
    }
    CLI::App* run = app.add_subcommand("run", "Re-run a JSON run manifest");
    run->add_option("--manifest", manifest, "Manifest file")->required();

    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? wpeb::cli::kOk : wpeb::cli::kUsage;
    }
    if (run->parsed()) {
        std::ifstream f(manifest);
        if (!f) throw std::invalid_argument("cannot open manifest " + manifest);
        return dispatch(args_from_manifest(Json::parse(f)));
    }
    return run_parsed(*chosen, chosen_sub, o, write_manifest);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(std::vector<std::string>(argv, argv + argc));
    } catch (const wpeb::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return wpeb::cli::kUsage;
    } catch (const wpeb::BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return wpeb::cli::kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return wpeb::cli::kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad manifest: " << e.what() << '\n';
        return wpeb::cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
