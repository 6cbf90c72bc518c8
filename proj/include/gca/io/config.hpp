#pragma once

/**
 * @file config.hpp
 * @brief JSON pattern configurations: parsing with field-path errors,
 *        conversion to ClusterPattern, and the normalized echo.
 *
 * Shape (keys other than n and B are optional):
 * @code
 * { "n": 2, "B": [[0,1],[-1,0]], "R": [2,1],
 *   "semifield": ["w"], "y0": ["w", "w^-1"], "z": {"1": ["w"]},
 *   "principal": false }
 * @endcode
 * With "principal": true the semifield is Trop(y, z) and y_t0 = y;
 * "semifield" and "y0" are then ignored and "z" must be absent.
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gca/errors.hpp"
#include "gca/pattern.hpp"
#include "gca/seed.hpp"
#include "gca/semifield.hpp"

namespace gca::io {

using json = nlohmann::json;

struct PatternConfig {
    std::size_t n = 0;
    IntMatrix b;
    std::vector<Exponent> r;
    bool principal = false;
    std::vector<std::string> semifield;
    std::vector<std::string> y0;
    /// z[i] lists z_{i,1..r_i-1}; empty when r_i = 1.
    std::vector<std::vector<std::string>> z;

    bool operator==(const PatternConfig&) const = default;
};

namespace detail {

inline std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

inline std::int64_t read_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) throw config_error(field, "expected an integer");
    return v.get<std::int64_t>();
}

inline const json& read_array(const json& v, const std::string& field) {
    if (!v.is_array()) throw config_error(field, "expected an array");
    return v;
}

inline std::string read_string(const json& v, const std::string& field) {
    if (!v.is_string()) throw config_error(field, "expected a string");
    return v.get<std::string>();
}

inline SemifieldElement parse_monomial(const TropicalSemifield& field, const std::string& text,
                                       const std::string& where) {
    try {
        return field.parse(text);
    } catch (const error& e) {
        throw config_error(where, e.what());
    }
}

}  // namespace detail

inline PatternConfig parse_config(const json& doc) {
    using detail::index_path;
    if (!doc.is_object()) throw config_error("", "configuration must be a JSON object");
    static const std::vector<std::string> known{"n", "B", "R", "semifield", "y0", "z", "principal"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) throw config_error(key, "unknown field");
    }

    PatternConfig c;
    if (!doc.contains("n")) throw config_error("n", "missing");
    const auto n = detail::read_int(doc["n"], "n");
    if (n < 1) throw config_error("n", "must be positive");
    c.n = static_cast<std::size_t>(n);

    if (!doc.contains("B")) throw config_error("B", "missing");
    const auto& rows = detail::read_array(doc["B"], "B");
    if (rows.size() != c.n) throw config_error("B", "expected " + std::to_string(c.n) + " rows");
    c.b = IntMatrix(c.n, c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
        const auto& row = detail::read_array(rows[i], index_path("B", i));
        if (row.size() != c.n) throw config_error(index_path("B", i), "expected " + std::to_string(c.n) + " entries");
        for (std::size_t j = 0; j < c.n; ++j) c.b(i, j) = detail::read_int(row[j], index_path(index_path("B", i), j));
    }
    try {
        (void)find_skew_symmetrizer(c.b);
    } catch (const not_skew_symmetrizable& e) {
        throw config_error("B", std::string("not skew-symmetrizable: ") + e.what());
    }

    c.r.assign(c.n, 1);
    if (doc.contains("R")) {
        const auto& r = detail::read_array(doc["R"], "R");
        if (r.size() != c.n) throw config_error("R", "expected " + std::to_string(c.n) + " entries");
        for (std::size_t i = 0; i < c.n; ++i) {
            c.r[i] = detail::read_int(r[i], index_path("R", i));
            if (c.r[i] < 1) throw config_error(index_path("R", i), "mutation degree must be positive");
        }
    }
    try {
        (void)find_skew_symmetrizer(IntMatrix::diagonal(c.r) * c.b);
    } catch (const not_skew_symmetrizable& e) {
        throw config_error("R", std::string("R B is not skew-symmetrizable: ") + e.what());
    }

    if (doc.contains("principal")) {
        if (!doc["principal"].is_boolean()) throw config_error("principal", "expected a boolean");
        c.principal = doc["principal"].get<bool>();
    }
    c.z.assign(c.n, {});
    if (c.principal) {
        if (doc.contains("z")) throw config_error("z", "must be omitted with principal coefficients");
        return c;
    }

    if (doc.contains("semifield")) {
        const auto& gens = detail::read_array(doc["semifield"], "semifield");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            c.semifield.push_back(detail::read_string(gens[i], index_path("semifield", i)));
        }
    }
    TropicalSemifield field;
    try {
        field = TropicalSemifield(c.semifield);
    } catch (const error& e) {
        throw config_error("semifield", e.what());
    }

    c.y0.assign(c.n, "1");
    if (doc.contains("y0")) {
        const auto& y = detail::read_array(doc["y0"], "y0");
        if (y.size() != c.n) throw config_error("y0", "expected " + std::to_string(c.n) + " entries");
        for (std::size_t i = 0; i < c.n; ++i) {
            c.y0[i] = detail::read_string(y[i], index_path("y0", i));
            (void)detail::parse_monomial(field, c.y0[i], index_path("y0", i));
        }
    }

    json z = json::object();
    if (doc.contains("z")) {
        z = doc["z"];
        if (!z.is_object()) throw config_error("z", "expected an object keyed by direction 1..n");
        for (const auto& [key, _] : z.items()) {
            bool valid = false;
            for (std::size_t k = 1; k <= c.n && !valid; ++k) valid = key == std::to_string(k);
            if (!valid) throw config_error("z." + key, "direction must be an integer in 1..n");
        }
    }
    for (std::size_t i = 0; i < c.n; ++i) {
        const std::string key = std::to_string(i + 1);
        const std::string where = "z." + key;
        const auto expected = static_cast<std::size_t>(c.r[i] - 1);
        if (!z.contains(key)) {
            if (expected != 0) throw config_error(where, "expected " + std::to_string(expected) + " frozen coefficients");
            continue;
        }
        const auto& list = detail::read_array(z[key], where);
        if (list.size() != expected) throw config_error(where, "expected " + std::to_string(expected) + " entries");
        std::vector<SemifieldElement> parsed;
        for (std::size_t s = 0; s < expected; ++s) {
            c.z[i].push_back(detail::read_string(list[s], index_path(where, s)));
            parsed.push_back(detail::parse_monomial(field, c.z[i].back(), index_path(where, s)));
        }
        for (std::size_t s = 0; s < expected; ++s) {
            if (parsed[s] != parsed[expected - 1 - s]) {
                throw config_error(index_path(where, s), "reciprocity z_{i,s} = z_{i,r_i-s} fails");
            }
        }
    }
    return c;
}

inline PatternConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error("", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

inline PatternConfig load_config(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw config_error("", "cannot open " + file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_text(text);
}

inline ClusterPattern make_pattern(const PatternConfig& c) {
    const ExchangeMatrix b(c.b);
    if (c.principal) return ClusterPattern::principal(b, c.r);
    TropicalSemifield field(c.semifield);
    std::vector<std::vector<SemifieldElement>> frozen(c.n);
    for (std::size_t i = 0; i < c.n; ++i)
        for (const auto& text : c.z[i]) frozen[i].push_back(field.parse(text));
    std::vector<SemifieldElement> y0;
    for (const auto& text : c.y0) y0.push_back(field.parse(text));
    MutationPair pair(c.r, std::move(frozen), field.rank());
    return ClusterPattern(std::move(field), b, std::move(pair), std::move(y0));
}

/// Normalized echo: every optional field spelled out, monomials re-rendered.
inline json to_json(const PatternConfig& c) {
    json doc;
    doc["n"] = c.n;
    json rows = json::array();
    for (std::size_t i = 0; i < c.n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < c.n; ++j) row.push_back(c.b(i, j));
        rows.push_back(row);
    }
    doc["B"] = rows;
    doc["R"] = c.r;
    doc["principal"] = c.principal;
    if (c.principal) return doc;
    const TropicalSemifield field(c.semifield);
    doc["semifield"] = c.semifield;
    json y0 = json::array();
    for (const auto& y : c.y0) y0.push_back(field.render(field.parse(y)));
    doc["y0"] = y0;
    json z = json::object();
    for (std::size_t i = 0; i < c.n; ++i) {
        if (c.z[i].empty()) continue;
        json list = json::array();
        for (const auto& t : c.z[i]) list.push_back(field.render(field.parse(t)));
        z[std::to_string(i + 1)] = list;
    }
    doc["z"] = z;
    return doc;
}

/// One pair configuration: {"left": <config>, "right": <config>}.
struct PairConfig {
    PatternConfig left;
    PatternConfig right;
};

inline bool is_pair_document(const json& doc) { return doc.is_object() && doc.contains("left") && doc.contains("right"); }

inline PairConfig parse_pair_config(const json& doc) {
    if (!is_pair_document(doc)) throw config_error("", "pair configuration needs 'left' and 'right'");
    for (const auto& [key, _] : doc.items()) {
        if (key != "left" && key != "right") throw config_error(key, "unknown field");
    }
    PairConfig p;
    try {
        p.left = parse_config(doc["left"]);
    } catch (const config_error& e) {
        throw config_error(e.field().empty() ? "left" : "left." + e.field(), e.message());
    }
    try {
        p.right = parse_config(doc["right"]);
    } catch (const config_error& e) {
        throw config_error(e.field().empty() ? "right" : "right." + e.field(), e.message());
    }
    return p;
}

}  // namespace gca::io
