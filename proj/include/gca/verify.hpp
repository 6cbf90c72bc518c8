#pragma once

/**
 * @file verify.hpp
 * @brief Per-seed verifiers packaged as reports: cluster formula, C-G
 *        duality, separation, D-matrix cross-check and the involution.
 */

#include <sstream>
#include <string>
#include <vector>

#include "gca/cluster_formula.hpp"
#include "gca/correspondence.hpp"
#include "gca/invariants.hpp"
#include "gca/pattern.hpp"
#include "gca/report.hpp"
#include "gca/seed.hpp"

namespace gca {

inline std::string path_text(const Path& path) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? "," : "") << path[i] + 1;
    out << ")";
    return out.str();
}

template <typename Rng>
VerificationReport verify_cluster_formula(const ClusterPattern& pattern, const std::vector<Path>& paths,
                                          std::size_t trials, Rng& rng, const Path& t0 = {}) {
    VerificationReport report;
    report.name = "cluster-formula";
    report.complete = false;
    for (const auto& t : paths) {
        const auto r = check_cluster_formula(pattern, t, t0, trials, rng);
        report.checked += r.trials;
        report.counts["resamples"] += r.resamples;
        report.counts["identity failures"] += r.identity_failures;
        report.counts["determinant failures"] += r.determinant_failures;
        for (const auto& v : r.violations) report.violations.push_back("t = " + path_text(t) + ", " + v);
    }
    report.counts["seeds"] = paths.size();
    return report;
}

/// C-G duality at each path of a principal pattern (the companion is used otherwise).
inline VerificationReport verify_cg_duality(const ClusterPattern& pattern, const std::vector<Path>& paths) {
    const ClusterPattern principal = pattern.is_principal() ? pattern : principal_companion(pattern);
    VerificationReport report;
    report.name = "cg-duality";
    report.complete = false;
    for (const auto& t : paths) {
        ++report.checked;
        if (!check_cg_duality(principal, t)) report.violations.push_back("duality fails at t = " + path_text(t));
    }
    return report;
}

/// Reconstruction from the principal companion versus direct mutation, at every path and index.
inline VerificationReport verify_separation(const ClusterPattern& general, const std::vector<Path>& paths) {
    const ClusterPattern principal = principal_companion(general);
    VerificationReport report;
    report.name = "separation";
    report.complete = false;
    for (const auto& t : paths) {
        const Seed direct = general.seed_at(t);
        const Seed principal_seed = principal.seed_at(t);
        for (std::size_t i = 0; i < general.rank(); ++i) {
            ++report.checked;
            const auto rec = separation_reconstruct(general, principal, principal_seed, i);
            if (rec.y != direct.y[i]) {
                report.violations.push_back("y_" + std::to_string(i + 1) + " differs at t = " + path_text(t));
            }
            if (!(rec.x == direct.x[i])) {
                report.violations.push_back("x_" + std::to_string(i + 1) + " differs at t = " + path_text(t));
            }
        }
    }
    return report;
}

/// D-matrix by recurrence against the denominators of the Laurent expansions.
inline VerificationReport verify_d_recurrence(const ClusterPattern& pattern, const std::vector<Path>& paths) {
    VerificationReport report;
    report.name = "d-recurrence";
    report.complete = false;
    for (const auto& t : paths) {
        ++report.checked;
        if (d_matrix_by_recurrence(pattern, t) != d_matrix_from_laurent(pattern.seed_at(t))) {
            report.violations.push_back("D-matrices differ at t = " + path_text(t));
        }
    }
    return report;
}

}  // namespace gca
