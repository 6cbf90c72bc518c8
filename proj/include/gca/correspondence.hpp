#pragma once

/**
 * @file correspondence.hpp
 * @brief Two patterns with B_t0 R = B̄_t0 R̄: D-matrix equality and the
 *        variable bijection x_{i;t} -> x̄_{i;t}.
 */

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gca/errors.hpp"
#include "gca/exchange_graph.hpp"
#include "gca/invariants.hpp"
#include "gca/pattern.hpp"
#include "gca/report.hpp"
#include "gca/seed.hpp"

namespace gca {

class AlgebraPair {
public:
    static AlgebraPair make(ClusterPattern left, ClusterPattern right) {
        if (left.rank() != right.rank()) throw dimension_error("patterns have different ranks");
        const IntMatrix lhs = left.initial_matrix().matrix() * IntMatrix::diagonal(left.pair().degrees());
        const IntMatrix rhs = right.initial_matrix().matrix() * IntMatrix::diagonal(right.pair().degrees());
        if (lhs != rhs) throw incompatible_initial_data("B R differs between the two patterns");
        return AlgebraPair(std::move(left), std::move(right));
    }

    const ClusterPattern& left() const noexcept { return left_; }
    const ClusterPattern& right() const noexcept { return right_; }
    std::size_t rank() const noexcept { return left_.rank(); }

private:
    AlgebraPair(ClusterPattern l, ClusterPattern r) : left_(std::move(l)), right_(std::move(r)) {}

    ClusterPattern left_;
    ClusterPattern right_;
};

inline VerificationReport verify_d_equality(const AlgebraPair& pair, const std::vector<std::pair<Path, Path>>& paths) {
    VerificationReport report;
    report.name = "d-equality";
    for (const auto& [w, v] : paths) {
        ++report.checked;
        const DMatrix left = d_matrix_between(pair.left(), w, v);
        const DMatrix right = d_matrix_between(pair.right(), w, v);
        if (left != right) {
            std::ostringstream msg;
            msg << "D-matrices differ for w = (";
            for (std::size_t i = 0; i < w.size(); ++i) msg << (i ? "," : "") << w[i] + 1;
            msg << "), v = (";
            for (std::size_t i = 0; i < v.size(); ++i) msg << (i ? "," : "") << v[i] + 1;
            msg << ")";
            report.violations.push_back(msg.str());
        }
    }
    return report;
}

/// Reduced tree paths (no immediate repeats) of length <= depth, in depth-first order.
inline std::vector<Path> tree_paths(std::size_t n, std::size_t depth) {
    std::vector<Path> out{Path{}};
    for (std::size_t start = 0; start < out.size(); ++start) {
        if (out[start].size() >= depth) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (!out[start].empty() && out[start].back() == k) continue;
            Path p = out[start];
            p.push_back(k);
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// All tree vertices within `depth` of t0, with their seeds; mutations are shared along prefixes.
inline std::vector<std::pair<Path, Seed>> seeds_within(const ClusterPattern& pattern, std::size_t depth) {
    std::vector<std::pair<Path, Seed>> out;
    out.emplace_back(Path{}, pattern.initial_seed());
    for (std::size_t start = 0; start < out.size(); ++start) {
        if (out[start].first.size() >= depth) continue;
        for (std::size_t k = 0; k < pattern.rank(); ++k) {
            if (!out[start].first.empty() && out[start].first.back() == k) continue;
            Path p = out[start].first;
            p.push_back(k);
            Seed s = mutate_seed(out[start].second, pattern.pair(), k);
            out.emplace_back(std::move(p), std::move(s));
        }
    }
    return out;
}

/// The map alpha at one tree address: (x_{i;t}, x̄_{i;t}).
inline std::pair<LaurentPolynomial, LaurentPolynomial> transport(const AlgebraPair& pair, const Path& path,
                                                                 std::size_t i) {
    if (i >= pair.rank()) throw argument_error("cluster index out of range");
    return {pair.left().seed_at(path).x[i], pair.right().seed_at(path).x[i]};
}

/**
 * Partitions the (vertex, index) pairs within `horizon` by variable value on
 * each side and checks that the partitions coincide; then compares the
 * induced cluster sets.
 */
inline VerificationReport verify_identification(const AlgebraPair& pair, std::size_t horizon) {
    VerificationReport report;
    report.name = "bijection";
    report.complete = false;
    const auto left = seeds_within(pair.left(), horizon);
    const auto right = seeds_within(pair.right(), horizon);
    const std::size_t n = pair.rank();

    std::unordered_map<std::string, std::size_t> left_class, right_class;
    std::map<std::size_t, std::size_t> alpha, alpha_inv;
    std::set<std::set<std::size_t>> left_clusters, right_clusters;
    for (std::size_t v = 0; v < left.size(); ++v) {
        std::set<std::size_t> lc, rc;
        for (std::size_t i = 0; i < n; ++i) {
            ++report.checked;
            const auto a = left_class.try_emplace(left[v].second.x[i].key(), left_class.size()).first->second;
            const auto b = right_class.try_emplace(right[v].second.x[i].key(), right_class.size()).first->second;
            lc.insert(a);
            rc.insert(b);
            const auto fa = alpha.try_emplace(a, b).first;
            const auto fb = alpha_inv.try_emplace(b, a).first;
            if (fa->second != b || fb->second != a) {
                std::ostringstream msg;
                msg << "partitions differ at path (";
                for (std::size_t j = 0; j < left[v].first.size(); ++j) msg << (j ? "," : "") << left[v].first[j] + 1;
                msg << "), index " << i + 1;
                report.violations.push_back(msg.str());
            }
        }
        left_clusters.insert(lc);
        right_clusters.insert(rc);
    }
    if (left_clusters.size() != right_clusters.size()) {
        report.violations.push_back("cluster counts differ: " + std::to_string(left_clusters.size()) + " vs " +
                                    std::to_string(right_clusters.size()));
    }
    for (const auto& lc : left_clusters) {
        std::set<std::size_t> image;
        for (auto a : lc) image.insert(alpha.at(a));
        if (!right_clusters.count(image)) report.violations.push_back("image of a left cluster is not a right cluster");
    }
    report.counts["horizon"] = horizon;
    report.counts["tree vertices"] = left.size();
    report.counts["left variables"] = left_class.size();
    report.counts["right variables"] = right_class.size();
    report.counts["left clusters"] = left_clusters.size();
    report.counts["right clusters"] = right_clusters.size();
    return report;
}

/// Number of distinct clusters (as sets) among the vertices of `g`.
inline std::size_t distinct_clusters(const ExchangeGraph& g) {
    std::set<std::set<std::size_t>> clusters;
    for (const auto& v : g.vertices()) clusters.emplace(v.cluster.begin(), v.cluster.end());
    return clusters.size();
}

/**
 * verify_identification plus both exchange graphs explored under `limits`;
 * the verdict is complete only when both graphs are complete and the tree
 * horizon covers every vertex of both.
 */
inline VerificationReport verify_bijection(const AlgebraPair& pair, std::size_t horizon, const ExploreLimits& limits) {
    VerificationReport report = verify_identification(pair, horizon);
    const ExchangeGraph left = explore(pair.left(), limits);
    const ExchangeGraph right = explore(pair.right(), limits);
    const auto left_clusters = distinct_clusters(left), right_clusters = distinct_clusters(right);
    report.counts["left graph vertices"] = left.vertex_count();
    report.counts["right graph vertices"] = right.vertex_count();
    report.counts["left graph variables"] = left.variable_count();
    report.counts["right graph variables"] = right.variable_count();
    report.counts["left graph clusters"] = left_clusters;
    report.counts["right graph clusters"] = right_clusters;
    std::size_t deepest = 0;
    for (const auto& v : left.vertices()) deepest = std::max(deepest, v.depth);
    for (const auto& v : right.vertices()) deepest = std::max(deepest, v.depth);
    report.complete = left.is_complete() && right.is_complete() && deepest <= horizon;
    if (left.is_complete() && right.is_complete()) {
        if (left_clusters != right_clusters) {
            report.violations.push_back("exchange graph cluster counts differ: " + std::to_string(left_clusters) +
                                        " vs " + std::to_string(right_clusters));
        }
        if (left.variable_count() != right.variable_count()) {
            report.violations.push_back("cluster variable counts differ: " + std::to_string(left.variable_count()) +
                                        " vs " + std::to_string(right.variable_count()));
        }
    }
    return report;
}

}  // namespace gca
