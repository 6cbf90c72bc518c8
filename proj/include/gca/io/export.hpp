#pragma once

/**
 * @file export.hpp
 * @brief JSON seed dumps, graph JSON/DOT export and report JSON.
 *
 * Matrices named D, C and G are written as arrays of column vectors; B is
 * row-major, as in the configuration.
 */

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gca/exchange_graph.hpp"
#include "gca/invariants.hpp"
#include "gca/io/config.hpp"
#include "gca/pattern.hpp"
#include "gca/report.hpp"
#include "gca/seed.hpp"

namespace gca::io {

inline json rows_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(row);
    }
    return out;
}

inline json columns_json(const IntMatrix& m) { return rows_json(m.transpose()); }

inline json path_json(const Path& path) {
    json out = json::array();
    for (auto k : path) out.push_back(k + 1);
    return out;
}

/// "1,2,1" (1-based) -> {0,1,0}; empty text is the empty path.
inline Path parse_path(std::string_view text, std::size_t n) {
    Path path;
    std::size_t start = 0;
    while (start < text.size()) {
        auto stop = text.find(',', start);
        auto token = gca::detail::trim(text.substr(start, stop == std::string_view::npos ? text.npos : stop - start));
        const auto k = gca::detail::parse_exponent(token, text);
        if (k < 1 || static_cast<std::size_t>(k) > n) {
            throw config_error("path", "direction " + std::string(token) + " outside 1.." + std::to_string(n));
        }
        path.push_back(static_cast<std::size_t>(k - 1));
        if (stop == std::string_view::npos) break;
        start = stop + 1;
    }
    return path;
}

inline json seed_json(const ClusterPattern& pattern, const Seed& seed) {
    const auto& field = pattern.semifield();
    json out;
    out["B"] = rows_json(seed.b.matrix());
    json x = json::array(), y = json::array();
    for (const auto& v : seed.x) x.push_back(v.to_string(field));
    for (const auto& v : seed.y) y.push_back(field.render(v));
    out["x"] = x;
    out["y"] = y;
    return out;
}

/// Seed at `path` with D-matrix, and C, G, F for principal patterns.
inline json seed_dump(const PatternConfig& config, const ClusterPattern& pattern, const Path& path) {
    const Seed seed = pattern.seed_at(path);
    json out;
    out["config"] = to_json(config);
    out["path"] = path_json(path);
    out["seed"] = seed_json(pattern, seed);
    out["D"] = columns_json(d_matrix_from_laurent(seed));
    if (pattern.is_principal()) {
        out["C"] = columns_json(c_matrix(pattern, seed));
        out["G"] = columns_json(g_matrix(pattern, seed));
        json f = json::array();
        for (std::size_t i = 0; i < seed.size(); ++i) f.push_back(f_polynomial(pattern, seed, i).to_string(pattern.semifield()));
        out["F"] = f;
    }
    return out;
}

/// 32-bit FNV-1a of a canonical key, as 8 hex digits.
inline std::string short_hash(std::string_view key) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : key) {
        h ^= c;
        h *= 16777619u;
    }
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", h);
    return buf;
}

inline json graph_json(const ExchangeGraph& g) {
    json out;
    out["complete"] = g.is_complete();
    out["vertex_count"] = g.vertex_count();
    out["edge_count"] = g.edge_count();
    out["variable_count"] = g.variable_count();
    json vertices = json::array();
    for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto& v = g.vertex(id);
        json jv;
        jv["id"] = id;
        jv["hash"] = short_hash(v.key);
        jv["path"] = path_json(v.path);
        jv["depth"] = v.depth;
        jv["seed"] = seed_json(g.pattern(), v.seed);
        jv["cluster"] = v.cluster;
        json nb = json::array();
        for (const auto& w : v.neighbor) nb.push_back(w ? json(*w) : json());
        jv["neighbors"] = nb;
        vertices.push_back(jv);
    }
    out["vertices"] = vertices;
    json edges = json::array();
    for (const auto& e : g.edges()) {
        json je;
        je["source"] = e.source;
        je["target"] = e.target;
        je["direction_at_source"] = e.direction_at_source ? json(*e.direction_at_source + 1) : json();
        je["direction_at_target"] = e.direction_at_target ? json(*e.direction_at_target + 1) : json();
        edges.push_back(je);
    }
    out["edges"] = edges;
    json variables = json::array();
    for (const auto& x : g.variables()) variables.push_back(x.to_string(g.pattern().semifield()));
    out["variables"] = variables;
    return out;
}

/// Undirected DOT; labels are key hashes, optionally followed by the D-matrix rows.
inline void write_dot(std::ostream& out, const ExchangeGraph& g, bool with_d_matrix = false) {
    out << "graph exchange {\n";
    for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto& v = g.vertex(id);
        out << "  v" << id << " [label=\"" << short_hash(v.key);
        if (with_d_matrix) {
            const DMatrix d = d_matrix_from_laurent(v.seed);
            for (std::size_t i = 0; i < d.rows(); ++i) {
                out << "\\n";
                for (std::size_t j = 0; j < d.cols(); ++j) out << (j ? " " : "") << d(i, j);
            }
        }
        out << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  v" << e.source << " -- v" << e.target << " [label=\"";
        if (e.direction_at_source) out << *e.direction_at_source + 1;
        if (e.direction_at_target && e.direction_at_target != e.direction_at_source) {
            out << "/" << *e.direction_at_target + 1;
        }
        out << "\"];\n";
    }
    out << "}\n";
}

inline json report_json(const VerificationReport& r) {
    json out;
    out["verifier"] = r.name;
    out["status"] = r.status();
    out["passed"] = r.passed();
    out["complete"] = r.complete;
    out["checked"] = r.checked;
    out["counts"] = r.counts;
    out["violations"] = r.violations;
    return out;
}

}  // namespace gca::io
