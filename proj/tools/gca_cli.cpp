/**
 * @file gca_cli.cpp
 * @brief Command-line front end: mutate, explore, verify.
 *
 * Exit status: 0 success / no violations, 1 violations found,
 * 2 usage or configuration error, 3 internal error.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gca/gca.hpp"
#include "gca/io/config.hpp"
#include "gca/io/export.hpp"

namespace {

using gca::io::json;

constexpr std::uint64_t default_rng_seed = 20240601;

enum exit_code : int { ok = 0, violations = 1, usage = 2, internal = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct options {
    std::string config;
    std::string path;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> max_vertices;
    std::size_t workers = 1;
    std::string format = "json";
    std::string output;
    std::uint64_t rng_seed = default_rng_seed;
    std::size_t trials = 20;
    bool d_labels = false;
    std::string selector;
};

json read_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw gca::config_error("", "cannot open " + file);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw gca::config_error("", std::string("invalid JSON: ") + e.what());
    }
}

void emit(const options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw usage_error("cannot write " + opt.output);
    out << text;
}

gca::ExploreLimits limits_of(const options& opt) {
    gca::ExploreLimits limits;
    limits.max_depth = opt.depth;
    limits.max_vertices = opt.max_vertices;
    if (!limits.max_depth && !limits.max_vertices) limits.max_vertices = 10000;
    limits.workers = opt.workers;
    return limits;
}

std::vector<gca::Path> vertex_paths(const gca::ExchangeGraph& g) {
    std::vector<gca::Path> out;
    for (const auto& v : g.vertices()) out.push_back(v.path);
    return out;
}

int cmd_mutate(const options& opt) {
    const auto config = gca::io::parse_config(read_json(opt.config));
    const auto pattern = gca::io::make_pattern(config);
    const auto path = gca::io::parse_path(opt.path, pattern.rank());
    emit(opt, gca::io::seed_dump(config, pattern, path).dump(2) + "\n");
    return ok;
}

int cmd_explore(const options& opt) {
    if (opt.format != "json" && opt.format != "dot") throw usage_error("unknown format '" + opt.format + "'");
    const auto pattern = gca::io::make_pattern(gca::io::parse_config(read_json(opt.config)));
    const auto graph = gca::explore(pattern, limits_of(opt));
    std::ostringstream body;
    if (opt.format == "dot") {
        gca::io::write_dot(body, graph, opt.d_labels);
    } else {
        body << gca::io::graph_json(graph).dump(2) << "\n";
    }
    emit(opt, body.str());
    std::ostream& summary = opt.output.empty() ? std::cerr : std::cout;
    const auto nv = graph.vertex_count(), ne = graph.edge_count();
    summary << nv << (nv == 1 ? " vertex, " : " vertices, ") << ne << (ne == 1 ? " edge, " : " edges, ")
            << (graph.is_complete() ? "complete" : "truncated") << "\n";
    for (const auto& a : graph.anomalies()) std::cerr << "anomaly: " << a << "\n";
    return ok;
}

gca::VerificationReport run_single(const options& opt, const gca::ClusterPattern& pattern) {
    const auto& s = opt.selector;
    if (s == "cluster-formula") {
        std::mt19937_64 rng(opt.rng_seed);
        const auto paths = gca::tree_paths(pattern.rank(), opt.depth.value_or(4));
        auto report = gca::verify_cluster_formula(pattern, paths, opt.trials, rng);
        report.counts["depth"] = opt.depth.value_or(4);
        return report;
    }
    const auto graph = gca::explore(pattern, limits_of(opt));
    gca::VerificationReport report;
    if (s == "connected-subgraph") {
        report = gca::verify_connected_subgraphs(graph);
    } else if (s == "d-trichotomy") {
        const gca::DenominatorTable table(graph);
        report.name = s;
        for (std::size_t base = 0; base < graph.vertex_count(); ++base) {
            report.merge(gca::verify_dvector_trichotomy(graph, base, table));
        }
        report.complete = graph.is_complete();
    } else if (s == "compatible-sets") {
        report = gca::verify_compatible_sets(graph);
    } else if (s == "cg-duality") {
        report = gca::verify_cg_duality(pattern, vertex_paths(graph));
        report.complete = graph.is_complete();
    } else if (s == "separation") {
        report = gca::verify_separation(pattern, vertex_paths(graph));
        report.complete = graph.is_complete();
    } else {
        throw usage_error("unknown selector '" + s + "'");
    }
    for (const auto& a : graph.anomalies()) report.violations.push_back("exploration: " + a);
    report.counts["vertices"] = graph.vertex_count();
    report.counts["edges"] = graph.edge_count();
    return report;
}

gca::VerificationReport run_pair(const options& opt, const gca::AlgebraPair& pair) {
    if (opt.selector == "d-equality") {
        const std::size_t depth = opt.depth.value_or(6);
        std::vector<std::pair<gca::Path, gca::Path>> paths;
        for (const auto& w : gca::tree_paths(pair.rank(), std::min<std::size_t>(depth, 2)))
            for (const auto& v : gca::tree_paths(pair.rank(), depth)) paths.emplace_back(w, v);
        auto report = gca::verify_d_equality(pair, paths);
        report.complete = false;
        report.counts["depth"] = depth;
        return report;
    }
    gca::ExploreLimits limits = limits_of(opt);
    limits.max_depth.reset();
    return gca::verify_bijection(pair, opt.depth.value_or(8), limits);
}

int cmd_verify(const options& opt) {
    static const std::vector<std::string> single{"connected-subgraph", "d-trichotomy", "compatible-sets",
                                                 "cluster-formula",    "cg-duality",   "separation"};
    static const std::vector<std::string> paired{"d-equality", "bijection"};
    const bool wants_pair = std::find(paired.begin(), paired.end(), opt.selector) != paired.end();
    const json doc = read_json(opt.config);
    const bool is_pair = gca::io::is_pair_document(doc);
    if (wants_pair && !is_pair) throw usage_error("selector '" + opt.selector + "' needs a pair configuration");
    if (!wants_pair && is_pair) throw usage_error("selector '" + opt.selector + "' needs a single configuration");

    gca::VerificationReport report;
    if (wants_pair) {
        const auto cfg = gca::io::parse_pair_config(doc);
        report = run_pair(opt, gca::AlgebraPair::make(gca::io::make_pattern(cfg.left), gca::io::make_pattern(cfg.right)));
    } else {
        report = run_single(opt, gca::io::make_pattern(gca::io::parse_config(doc)));
    }
    json out = gca::io::report_json(report);
    out["rng_seed"] = opt.rng_seed;
    emit(opt, out.dump(2) + "\n");
    return report.passed() ? ok : violations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in generalized cluster algebras"};
    app.require_subcommand(1);
    options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "pattern (or pair) configuration JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--output", opt.output, "write the result here instead of stdout");
    };
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--depth", opt.depth, "depth limit");
        sub->add_option("--max-vertices", opt.max_vertices, "vertex limit (default 10000 when no depth is given)");
        sub->add_option("--workers", opt.workers, "threads used to mutate the frontier")->check(CLI::PositiveNumber);
    };

    auto* mutate = app.add_subcommand("mutate", "print the seed at a tree path");
    add_common(mutate);
    mutate->add_option("--path", opt.path, "mutation directions, 1-based, comma separated");

    auto* explore = app.add_subcommand("explore", "enumerate the exchange graph");
    add_common(explore);
    add_limits(explore);
    explore->add_option("--format", opt.format, "dot or json")->capture_default_str();
    explore->add_flag("--d-labels", opt.d_labels, "add D-matrices to DOT labels");

    auto* verify = app.add_subcommand("verify", "run a verifier and print a JSON report");
    verify->add_option("selector", opt.selector, "verifier")
        ->required()
        ->check(CLI::IsMember({"connected-subgraph", "d-trichotomy", "compatible-sets", "d-equality", "bijection",
                               "cluster-formula", "cg-duality", "separation"}));
    add_common(verify);
    add_limits(verify);
    verify->add_option("--rng-seed", opt.rng_seed, "seed for random evaluation points")->capture_default_str();
    verify->add_option("--trials", opt.trials, "random points per seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return usage;
    }

    try {
        if (*mutate) return cmd_mutate(opt);
        if (*explore) return cmd_explore(opt);
        return cmd_verify(opt);
    } catch (const gca::config_error& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return usage;
    } catch (const usage_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return usage;
    } catch (const gca::incompatible_initial_data& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal;
    }
}
