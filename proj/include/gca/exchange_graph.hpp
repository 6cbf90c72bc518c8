#pragma once

/**
 * @file exchange_graph.hpp
 * @brief Exchange graphs up to seed equivalence, and the verifiers that
 *        run over them (connected subgraphs, d-vector trichotomy,
 *        compatible sets).
 *
 * Two seeds are equivalent when a permutation sigma gives
 * x_{i;t2} = x_{sigma(i);t1}, y_{i;t2} = y_{sigma(i);t1} and
 * b^{t2}_{ij} = b^{t1}_{sigma(i)sigma(j)}. Cluster variables inside one seed
 * are pairwise distinct, so sorting them by their canonical serialization
 * fixes a unique labeling; the key of that labeling decides equivalence.
 *
 * Vertex seeds keep the labeling of the tree vertex they were first
 * reached at (their `path`), so d-vectors and tree walks stay meaningful.
 */

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gca/errors.hpp"
#include "gca/invariants.hpp"
#include "gca/laurent.hpp"
#include "gca/pattern.hpp"
#include "gca/report.hpp"
#include "gca/seed.hpp"

namespace gca {

struct CanonicalSeed {
    std::string key;          ///< cluster, coefficients, B, r and z in canonical order
    std::string cluster_key;  ///< sorted cluster alone
    Seed seed;                ///< relabeled seed
    MutationPair pair;        ///< mutation pair transported along the relabeling
    std::vector<std::size_t> perm;  ///< canonical position c holds original index perm[c]
};

namespace detail {

inline void append_vector(std::string& out, std::span<const Exponent> v) {
    for (auto e : v) {
        out += std::to_string(e);
        out += ',';
    }
    out += ';';
}

}  // namespace detail

inline CanonicalSeed canonical_form(const Seed& seed, const MutationPair& pair) {
    require_consistent(seed, pair);
    const std::size_t n = seed.size();
    std::vector<std::string> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = seed.x[i].key();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (std::size_t c = 1; c < n; ++c) {
        if (keys[perm[c]] == keys[perm[c - 1]]) {
            throw error("seed has repeated cluster variables at " + std::to_string(perm[c - 1] + 1) + " and " +
                        std::to_string(perm[c] + 1));
        }
    }

    CanonicalSeed out;
    out.perm = perm;
    out.seed = seed.permuted(perm);
    out.pair = pair.permuted(perm);
    for (auto i : perm) {
        out.cluster_key += keys[i];
        out.cluster_key += '#';
    }
    std::string& key = out.key;
    key = "X:" + out.cluster_key + "Y:";
    for (const auto& y : out.seed.y) detail::append_vector(key, y.exponents());
    key += "B:";
    const auto& b = out.seed.b.matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            key += std::to_string(b(i, j));
            key += ',';
        }
    key += "R:";
    detail::append_vector(key, out.pair.degrees());
    key += "Z:";
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& z : out.pair.frozen(i)) detail::append_vector(key, z.exponents());
        key += '/';
    }
    return out;
}

struct ExploreLimits {
    std::optional<std::size_t> max_depth;
    std::optional<std::size_t> max_vertices;
    /// Worker threads computing frontier mutations; the merge is sequential
    /// in vertex/direction order, so the graph does not depend on this.
    std::size_t workers = 1;
};

struct GraphVertex {
    Seed seed;
    Path path;
    std::size_t depth = 0;
    std::string key;
    std::vector<std::size_t> cluster;  ///< variable ids, indexed like seed.x
    std::vector<std::optional<std::size_t>> neighbor;  ///< by direction in this vertex's labeling
    bool attempted = false;
};

struct GraphEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::optional<std::size_t> direction_at_source;
    std::optional<std::size_t> direction_at_target;
};

class ExchangeGraph {
public:
    explicit ExchangeGraph(ClusterPattern pattern) : pattern_(std::move(pattern)) {}

    const ClusterPattern& pattern() const noexcept { return pattern_; }
    const std::vector<GraphVertex>& vertices() const noexcept { return vertices_; }
    const GraphVertex& vertex(std::size_t id) const { return vertices_.at(id); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    const std::vector<LaurentPolynomial>& variables() const noexcept { return variables_; }
    std::size_t variable_count() const noexcept { return variables_.size(); }

    std::optional<std::size_t> find_variable(const LaurentPolynomial& x) const {
        auto it = variable_ids_.find(x.key());
        if (it == variable_ids_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find_seed(const Seed& seed) const {
        auto it = key_index_.find(canonical_form(seed, pattern_.pair()).key);
        if (it == key_index_.end()) return std::nullopt;
        return it->second;
    }

    /// Every vertex has all n neighbors resolved.
    bool is_complete() const {
        if (vertices_.empty()) return false;
        for (const auto& v : vertices_)
            for (const auto& nb : v.neighbor)
                if (!nb) return false;
        return true;
    }

    std::vector<std::size_t> neighbors(std::size_t id) const {
        std::set<std::size_t> out;
        for (const auto& nb : vertices_.at(id).neighbor)
            if (nb) out.insert(*nb);
        return {out.begin(), out.end()};
    }

    std::vector<GraphEdge> edges() const {
        std::map<std::pair<std::size_t, std::size_t>, GraphEdge> by_pair;
        for (std::size_t a = 0; a < vertices_.size(); ++a) {
            const auto& nbs = vertices_[a].neighbor;
            for (std::size_t k = 0; k < nbs.size(); ++k) {
                if (!nbs[k]) continue;
                const std::size_t b = *nbs[k];
                auto lo = std::min(a, b), hi = std::max(a, b);
                auto [it, inserted] = by_pair.try_emplace({lo, hi});
                auto& e = it->second;
                e.source = lo;
                e.target = hi;
                (a == lo ? e.direction_at_source : e.direction_at_target) = k;
            }
        }
        std::vector<GraphEdge> out;
        for (auto& [_, e] : by_pair) out.push_back(e);
        return out;
    }

    std::size_t edge_count() const { return edges().size(); }

    /// Permuted-initial-cluster and back-link anomalies met while exploring; expected empty.
    const std::vector<std::string>& anomalies() const noexcept { return anomalies_; }
    /// Deduplication hits whose seed had a zero column in B.
    std::size_t zero_column_hits() const noexcept { return zero_column_hits_; }
    std::size_t deduplication_hits() const noexcept { return dedup_hits_; }

    /// Breadth-first extension under `limits`; may be called again with
    /// larger limits to resume from the stored frontier.
    void extend(const ExploreLimits& limits) {
        const std::size_t n = pattern_.rank();
        if (vertices_.empty()) add_vertex(pattern_.initial_seed(), {}, 0);
        for (auto& v : vertices_)
            if (has_unresolved(v)) v.attempted = false;

        while (true) {
            std::vector<std::size_t> batch;
            for (std::size_t id = 0; id < vertices_.size(); ++id) {
                const auto& v = vertices_[id];
                if (v.attempted || !has_unresolved(v)) continue;
                if (limits.max_depth && v.depth >= *limits.max_depth) continue;
                batch.push_back(id);
            }
            if (batch.empty()) break;

            std::vector<std::pair<std::size_t, std::size_t>> tasks;
            for (auto id : batch)
                for (std::size_t k = 0; k < n; ++k)
                    if (!vertices_[id].neighbor[k]) tasks.emplace_back(id, k);
            auto results = compute_mutations(tasks, limits.workers);

            for (std::size_t t = 0; t < tasks.size(); ++t) {
                const auto [id, k] = tasks[t];
                if (vertices_[id].neighbor[k]) continue;  // filled by a back-link
                auto& [seed, canon] = results[t];
                if (auto hit = key_index_.find(canon.key); hit != key_index_.end()) {
                    ++dedup_hits_;
                    link(id, k, hit->second, canon);
                    continue;
                }
                if (auto same = cluster_index_.find(canon.cluster_key); same != cluster_index_.end()) {
                    throw inconsistent_degree_transport(
                        "seed reached from vertex " + std::to_string(id) + " by direction " + std::to_string(k + 1) +
                        " has the cluster of vertex " + std::to_string(same->second) +
                        " but different transported y, B, r or z");
                }
                if (limits.max_vertices && vertices_.size() >= *limits.max_vertices) continue;
                Path path = vertices_[id].path;
                path.push_back(k);
                const std::size_t w = add_vertex(std::move(seed), std::move(path), vertices_[id].depth + 1);
                link(id, k, w, canon);
            }
            for (auto id : batch) vertices_[id].attempted = true;
        }
    }

private:
    struct Candidate {
        Seed seed;
        CanonicalSeed canon;
    };

    static bool has_unresolved(const GraphVertex& v) {
        return std::any_of(v.neighbor.begin(), v.neighbor.end(), [](const auto& nb) { return !nb; });
    }

    std::vector<Candidate> compute_mutations(const std::vector<std::pair<std::size_t, std::size_t>>& tasks,
                                             std::size_t workers) const {
        std::vector<Candidate> results(tasks.size());
        auto work = [&](std::size_t begin, std::size_t stride) {
            for (std::size_t t = begin; t < tasks.size(); t += stride) {
                const auto [id, k] = tasks[t];
                Seed s = mutate_seed(vertices_[id].seed, pattern_.pair(), k);
                CanonicalSeed c = canonical_form(s, pattern_.pair());
                results[t] = Candidate{std::move(s), std::move(c)};
            }
        };
        workers = std::max<std::size_t>(1, std::min(workers, tasks.size()));
        if (workers == 1) {
            work(0, 1);
            return results;
        }
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    work(w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        return results;
    }

    std::size_t add_vertex(Seed seed, Path path, std::size_t depth) {
        const std::size_t n = pattern_.rank();
        const CanonicalSeed canon = canonical_form(seed, pattern_.pair());
        GraphVertex v;
        v.path = std::move(path);
        v.depth = depth;
        v.key = canon.key;
        v.neighbor.assign(n, std::nullopt);
        for (const auto& x : seed.x) {
            auto [it, inserted] = variable_ids_.try_emplace(x.key(), variables_.size());
            if (inserted) variables_.push_back(x);
            v.cluster.push_back(it->second);
        }
        v.seed = std::move(seed);
        const std::size_t id = vertices_.size();
        key_index_.emplace(v.key, id);
        cluster_index_.emplace(canon.cluster_key, id);
        check_permuted_initial(v, id);
        vertices_.push_back(std::move(v));
        return id;
    }

    /// D-matrix a column permutation of -I forces the permuted initial cluster.
    void check_permuted_initial(const GraphVertex& v, std::size_t id) {
        const std::size_t n = pattern_.rank();
        const DMatrix d = d_matrix_from_laurent(v.seed);
        std::vector<std::size_t> sigma(n);
        std::vector<bool> used(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            std::optional<std::size_t> hit;
            for (std::size_t row = 0; row < n; ++row) {
                const auto e = d(row, j);
                if (e == -1 && !hit) {
                    hit = row;
                } else if (e != 0) {
                    return;
                }
            }
            if (!hit || used[*hit]) return;
            used[*hit] = true;
            sigma[j] = *hit;
        }
        const Seed initial = pattern_.initial_seed();
        for (std::size_t j = 0; j < n; ++j) {
            if (!(v.seed.x[j] == initial.x[sigma[j]])) {
                anomalies_.push_back("vertex " + std::to_string(id) + ": D-matrix is a permuted -I but x_" +
                                     std::to_string(j + 1) + " is not the matching initial variable");
            }
        }
    }

    /**
     * Records v --k--> w. `canon` is the canonical form of mu_k(seed_v);
     * sigma(j) = index in w's labeling of the candidate's component j. The
     * full equivalence (x, y, B, r, z transported by sigma) is re-checked.
     */
    void link(std::size_t v, std::size_t k, std::size_t w, const CanonicalSeed& canon) {
        const std::size_t n = pattern_.rank();
        const CanonicalSeed target = canonical_form(vertices_[w].seed, pattern_.pair());
        std::vector<std::size_t> sigma(n);
        for (std::size_t c = 0; c < n; ++c) sigma[canon.perm[c]] = target.perm[c];

        // Reconstruct the candidate in its own labeling from the canonical copy.
        std::vector<std::size_t> inv(n);
        for (std::size_t c = 0; c < n; ++c) inv[canon.perm[c]] = c;
        const Seed candidate = canon.seed.permuted(inv);
        const Seed& ws = vertices_[w].seed;
        const auto& pair = pattern_.pair();
        bool zero_column = false;
        for (std::size_t j = 0; j < n; ++j) {
            const auto sj = sigma[j];
            std::string what;
            if (!(candidate.x[j] == ws.x[sj])) what = "x";
            if (candidate.y[j] != ws.y[sj]) what = "y";
            if (pair.degree(j) != pair.degree(sj)) what = "r";
            if (pair.frozen(j) != pair.frozen(sj)) what = "z";
            bool column_zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (candidate.b(i, j) != ws.b(sigma[i], sj)) what = "B";
                column_zero = column_zero && candidate.b(i, j) == 0;
            }
            zero_column = zero_column || column_zero;
            if (!what.empty()) {
                throw inconsistent_degree_transport("equivalence between mu_" + std::to_string(k + 1) + " of vertex " +
                                                    std::to_string(v) + " and vertex " + std::to_string(w) +
                                                    " does not transport " + what + " at index " +
                                                    std::to_string(j + 1));
            }
        }
        if (zero_column) ++zero_column_hits_;

        vertices_[v].neighbor[k] = w;
        auto& back = vertices_[w].neighbor[sigma[k]];
        if (back && *back != v) {
            anomalies_.push_back("vertex " + std::to_string(w) + " direction " + std::to_string(sigma[k] + 1) +
                                 " leads to both " + std::to_string(*back) + " and " + std::to_string(v));
        }
        back = v;
    }

    ClusterPattern pattern_;
    std::vector<GraphVertex> vertices_;
    std::vector<LaurentPolynomial> variables_;
    std::unordered_map<std::string, std::size_t> variable_ids_;
    std::unordered_map<std::string, std::size_t> key_index_;
    std::unordered_map<std::string, std::size_t> cluster_index_;
    std::vector<std::string> anomalies_;
    std::size_t zero_column_hits_ = 0;
    std::size_t dedup_hits_ = 0;
};

inline ExchangeGraph explore(const ClusterPattern& pattern, const ExploreLimits& limits) {
    ExchangeGraph g(pattern);
    g.extend(limits);
    return g;
}

/// compat[a][b]: some cluster contains both variables.
inline std::vector<std::vector<bool>> compatibility_matrix(const ExchangeGraph& g) {
    const std::size_t count = g.variable_count();
    std::vector<std::vector<bool>> compat(count, std::vector<bool>(count, false));
    for (const auto& v : g.vertices())
        for (auto a : v.cluster)
            for (auto b : v.cluster) compat[a][b] = true;
    return compat;
}

inline bool compatibility(const ExchangeGraph& g, std::size_t a, std::size_t b) {
    if (a >= g.variable_count() || b >= g.variable_count()) throw unknown_variable("variable id not in the graph");
    for (const auto& v : g.vertices()) {
        const bool has_a = std::find(v.cluster.begin(), v.cluster.end(), a) != v.cluster.end();
        const bool has_b = std::find(v.cluster.begin(), v.cluster.end(), b) != v.cluster.end();
        if (has_a && has_b) return true;
    }
    return false;
}

inline bool compatibility(const ExchangeGraph& g, const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto ia = g.find_variable(a), ib = g.find_variable(b);
    if (!ia || !ib) throw unknown_variable("cluster variable does not occur in the graph");
    return compatibility(g, *ia, *ib);
}

struct SubgraphResult {
    bool connected = true;
    std::vector<std::size_t> vertices;  ///< seeds whose cluster contains every member of J
};

/// Seeds containing all of `j` (variable ids) and whether they induce a connected subgraph.
inline SubgraphResult connected_subgraph(const ExchangeGraph& g, const std::vector<std::size_t>& j) {
    SubgraphResult out;
    std::vector<bool> member(g.vertex_count(), false);
    for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto& cl = g.vertex(id).cluster;
        if (std::all_of(j.begin(), j.end(),
                        [&](std::size_t var) { return std::find(cl.begin(), cl.end(), var) != cl.end(); })) {
            member[id] = true;
            out.vertices.push_back(id);
        }
    }
    if (out.vertices.empty()) return out;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{out.vertices.front()};
    seen[out.vertices.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v)) {
            if (member[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    out.connected = reached == out.vertices.size();
    return out;
}

/// Connectivity of the seeds containing J, for every subset J of every cluster.
inline VerificationReport verify_connected_subgraphs(const ExchangeGraph& g) {
    VerificationReport report;
    report.name = "connected-subgraph";
    report.complete = g.is_complete();
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto& cl = g.vertex(id).cluster;
        const std::size_t n = cl.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::size_t> j;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u) j.push_back(cl[i]);
            std::sort(j.begin(), j.end());
            if (!seen.insert(j).second) continue;
            ++report.checked;
            const auto result = connected_subgraph(g, j);
            if (!result.connected) {
                std::ostringstream msg;
                msg << "seeds containing {";
                for (std::size_t i = 0; i < j.size(); ++i) msg << (i ? "," : "") << j[i];
                msg << "} do not form a connected subgraph";
                report.violations.push_back(msg.str());
            }
        }
    }
    report.counts["subsets"] = report.checked;
    return report;
}

/**
 * d-vectors of every variable with respect to every vertex's cluster,
 * from Laurent expansions over that cluster (the pattern re-based at the
 * vertex, then walked through the tree to each other vertex).
 */
class DenominatorTable {
public:
    explicit DenominatorTable(const ExchangeGraph& g) : table_(g.vertex_count()) {
        const auto& pattern = g.pattern();
        for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            const ClusterPattern base = pattern.rebased(g.vertex(w).path);
            const Seed start = base.initial_seed();
            auto& row = table_[w];
            row.assign(g.variable_count(), std::nullopt);
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                const Seed s = apply_path(start, base.pair(), walk_between(g.vertex(w).path, g.vertex(v).path));
                for (std::size_t i = 0; i < s.size(); ++i) {
                    const auto var = g.vertex(v).cluster[i];
                    DVector d = denominator_vector(s.x[i]);
                    if (!row[var]) {
                        row[var] = std::move(d);
                    } else if (*row[var] != d) {
                        inconsistencies_.push_back("variable " + std::to_string(var) +
                                                   " has two different d-vectors with respect to vertex " +
                                                   std::to_string(w));
                    }
                }
            }
        }
    }

    /// d-vector of variable `var` with respect to the cluster of vertex `base`.
    const DVector& at(std::size_t var, std::size_t base) const { return table_.at(base).at(var).value(); }

    const std::vector<std::string>& inconsistencies() const noexcept { return inconsistencies_; }

private:
    std::vector<std::vector<std::optional<DVector>>> table_;
    std::vector<std::string> inconsistencies_;
};

/**
 * For every variable X and every k, with K = x_{k;t0} of the base vertex:
 * d_k = -1 iff X = K, d_k = 0 iff X != K and compatible, d_k > 0 iff
 * incompatible; and d_k agrees with the entry for K computed against
 * every other cluster containing K.
 */
inline VerificationReport verify_dvector_trichotomy(const ExchangeGraph& g, std::size_t base,
                                                    const DenominatorTable& table) {
    VerificationReport report;
    report.name = "d-trichotomy";
    report.complete = g.is_complete();
    report.violations = table.inconsistencies();
    const auto compat = compatibility_matrix(g);
    const auto& base_cluster = g.vertex(base).cluster;
    const std::size_t n = base_cluster.size();
    for (std::size_t x = 0; x < g.variable_count(); ++x) {
        const DVector& d = table.at(x, base);
        for (std::size_t k = 0; k < n; ++k) {
            ++report.checked;
            const auto kv = base_cluster[k];
            const Exponent dk = d[k];
            std::string where = "variable " + std::to_string(x) + ", k = " + std::to_string(k + 1) + ", base vertex " +
                                std::to_string(base) + ": d_k = " + std::to_string(dk);
            if (dk < -1) report.violations.push_back(where + " < -1");
            if ((dk == -1) != (x == kv)) report.violations.push_back(where + " but equality with x_k is " +
                                                                     (x == kv ? "true" : "false"));
            if ((dk == 0) != (x != kv && compat[x][kv])) {
                report.violations.push_back(where + " disagrees with compatibility");
            }
            if ((dk > 0) != !compat[x][kv]) report.violations.push_back(where + " disagrees with incompatibility");
            for (std::size_t w = 0; w < g.vertex_count(); ++w) {
                const auto& cl = g.vertex(w).cluster;
                auto pos = std::find(cl.begin(), cl.end(), kv);
                if (pos == cl.end()) continue;
                ++report.counts["cross-cluster checks"];
                const auto kk = static_cast<std::size_t>(pos - cl.begin());
                if (table.at(x, w)[kk] != dk) {
                    report.violations.push_back(where + " but " + std::to_string(table.at(x, w)[kk]) +
                                                " against vertex " + std::to_string(w));
                }
            }
        }
    }
    return report;
}

inline VerificationReport verify_dvector_trichotomy(const ExchangeGraph& g, std::size_t base) {
    return verify_dvector_trichotomy(g, base, DenominatorTable(g));
}

/**
 * Brute force over all subsets of the variable set: every compatible set
 * lies in a cluster, and the maximal ones are exactly the clusters.
 */
inline VerificationReport verify_compatible_sets(const ExchangeGraph& g, std::size_t max_variables = 24) {
    VerificationReport report;
    report.name = "compatible-sets";
    report.complete = g.is_complete();
    const std::size_t count = g.variable_count();
    if (count > max_variables) throw argument_error("too many cluster variables for subset enumeration");
    const auto compat = compatibility_matrix(g);
    std::vector<std::uint64_t> neighbours(count, 0);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            if (compat[a][b]) neighbours[a] |= std::uint64_t{1} << b;
    std::set<std::uint64_t> clusters;
    for (const auto& v : g.vertices()) {
        std::uint64_t mask = 0;
        for (auto var : v.cluster) mask |= std::uint64_t{1} << var;
        clusters.insert(mask);
    }
    const std::uint64_t all = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    std::size_t compatible_sets = 0, maximal_sets = 0;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        std::uint64_t common = all;
        bool ok = true;
        for (std::size_t a = 0; a < count && ok; ++a) {
            if (!(mask >> a & 1u)) continue;
            ok = (mask & ~neighbours[a]) == 0;
            common &= neighbours[a];
        }
        if (!ok) continue;
        ++compatible_sets;
        ++report.checked;
        const bool inside = std::any_of(clusters.begin(), clusters.end(),
                                        [&](std::uint64_t c) { return (mask & ~c) == 0; });
        if (!inside) report.violations.push_back("compatible set " + std::to_string(mask) + " lies in no cluster");
        const bool maximal = (common & ~mask) == 0;
        if (maximal) {
            ++maximal_sets;
            if (!clusters.count(mask)) {
                report.violations.push_back("maximal compatible set " + std::to_string(mask) + " is not a cluster");
            }
        }
        if (mask == all) break;
    }
    report.counts["variables"] = count;
    report.counts["clusters"] = clusters.size();
    report.counts["compatible sets"] = compatible_sets;
    report.counts["maximal compatible sets"] = maximal_sets;
    if (maximal_sets != clusters.size()) {
        report.violations.push_back("found " + std::to_string(maximal_sets) + " maximal compatible sets but " +
                                    std::to_string(clusters.size()) + " clusters");
    }
    return report;
}

}  // namespace gca
