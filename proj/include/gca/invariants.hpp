#pragma once

/**
 * @file invariants.hpp
 * @brief D-, C- and G-matrices, F-polynomials, C-G duality and separation.
 *
 * Matrices hold one vector per column: column i of a D-matrix is the
 * d-vector of x_{i;t}, column i of a C-matrix the c-vector of y_{i;t}.
 * C, G and F are read off a pattern with principal coefficients, whose
 * cluster variables are the X-functions X_{i;t}.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gca/errors.hpp"
#include "gca/laurent.hpp"
#include "gca/matrix.hpp"
#include "gca/pattern.hpp"
#include "gca/seed.hpp"
#include "gca/semifield.hpp"

namespace gca {

using DMatrix = IntMatrix;
using CMatrix = IntMatrix;
using GMatrix = IntMatrix;

/// One step of the d-vector recurrence at direction k; `b` is B_t before mutation.
inline void mutate_d_matrix(DMatrix& d, const IntMatrix& b, std::span<const Exponent> degrees, std::size_t k) {
    const std::size_t n = d.rows();
    const Exponent r = degrees[k];
    std::vector<Exponent> pos(n, 0), neg(n, 0);
    for (std::size_t l = 0; l < n; ++l) {
        const Exponent blk = b(l, k);
        if (blk == 0) continue;
        for (std::size_t row = 0; row < n; ++row) {
            if (blk > 0) {
                pos[row] = checked_add(pos[row], checked_mul(d(row, l), checked_mul(blk, r)));
            } else {
                neg[row] = checked_add(neg[row], checked_mul(-d(row, l), checked_mul(blk, r)));
            }
        }
    }
    for (std::size_t row = 0; row < n; ++row) d(row, k) = checked_add(-d(row, k), std::max(pos[row], neg[row]));
}

/// D-matrix of x_t with respect to the initial cluster of a pattern whose
/// initial matrix is b0, via the integer recurrence from D = -I.
inline DMatrix d_matrix_by_recurrence(const IntMatrix& b0, std::span<const Exponent> degrees, const Path& path) {
    DMatrix d = -DMatrix::identity(b0.rows());
    IntMatrix b = b0;
    for (auto k : path) {
        mutate_d_matrix(d, b, degrees, k);
        b = mutate_matrix(b, degrees, k);
    }
    return d;
}

inline DMatrix d_matrix_by_recurrence(const ClusterPattern& pattern, const Path& path) {
    return d_matrix_by_recurrence(pattern.initial_matrix().matrix(), pattern.pair().degrees(), path);
}

/// D^w_v: d-vectors of x_v with respect to x_w, both vertices given as paths from t0.
inline DMatrix d_matrix_between(const ClusterPattern& pattern, const Path& w, const Path& v) {
    return d_matrix_by_recurrence(pattern.matrix_at(w), pattern.pair().degrees(), walk_between(w, v));
}

inline DMatrix d_matrix_from_laurent(const Seed& seed) {
    const std::size_t n = seed.size();
    DMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.set_column(i, denominator_vector(seed.x[i]));
    return d;
}

namespace detail {

inline const PrincipalLayout& require_principal(const ClusterPattern& p) {
    if (!p.principal_layout()) throw argument_error("pattern does not have principal coefficients");
    return *p.principal_layout();
}

}  // namespace detail

/// C-matrix of a principal-coefficient seed; rejects y_{i;t} carrying z.
inline CMatrix c_matrix(const ClusterPattern& principal, const Seed& seed) {
    const auto& layout = detail::require_principal(principal);
    const std::size_t n = seed.size();
    CMatrix c(n, n);
    std::vector<bool> is_y(principal.semifield().rank(), false);
    for (auto g : layout.y_generators) is_y[g] = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& y = seed.y[i];
        for (std::size_t g = 0; g < y.rank(); ++g) {
            if (!is_y[g] && y[g] != 0) {
                throw non_monomial_coefficient("y_" + std::to_string(i + 1) + " carries frozen generator " +
                                               principal.semifield().generators()[g]);
            }
        }
        for (std::size_t j = 0; j < n; ++j) c(j, i) = y[layout.y_generators[j]];
    }
    return c;
}

inline CMatrix c_matrix(const ClusterPattern& principal, const Path& path) {
    return c_matrix(principal, principal.seed_at(path));
}

/// Degree of X_{i;t} under deg x_j = e_j, deg y_j = -b_j (column of B_t0), deg z = 0.
inline ExponentVector g_vector(const ClusterPattern& principal, const Seed& seed, std::size_t i) {
    const auto& layout = detail::require_principal(principal);
    const auto& b0 = principal.initial_matrix();
    const std::size_t n = principal.rank();
    const auto& x = seed.x.at(i);
    std::optional<ExponentVector> common;
    for (const auto& [e, c] : x.terms()) {
        ExponentVector deg(e.begin(), e.begin() + n);
        for (std::size_t j = 0; j < n; ++j) {
            const Exponent yj = e[n + layout.y_generators[j]];
            if (yj == 0) continue;
            for (std::size_t row = 0; row < n; ++row) deg[row] -= yj * b0(row, j);
        }
        if (!common) {
            common = std::move(deg);
        } else if (*common != deg) {
            throw not_homogeneous("X_" + std::to_string(i + 1) + " is not homogeneous");
        }
    }
    if (!common) throw argument_error("g_vector of zero polynomial");
    return *common;
}

inline GMatrix g_matrix(const ClusterPattern& principal, const Seed& seed) {
    const std::size_t n = seed.size();
    GMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g.set_column(i, g_vector(principal, seed, i));
    return g;
}

/// F_{i;t} = X_{i;t} at x = 1, an element of Z[y, z] (over the principal semifield).
inline GroupRingElement f_polynomial(const ClusterPattern& principal, const Seed& seed, std::size_t i) {
    (void)detail::require_principal(principal);
    const std::size_t n = principal.rank();
    const std::size_t m = principal.semifield().rank();
    GroupRingElement f(m);
    for (const auto& [e, c] : seed.x.at(i).terms()) {
        ExponentVector u(e.begin() + n, e.end());
        if (std::any_of(u.begin(), u.end(), [](Exponent v) { return v < 0; })) {
            throw negative_coefficient_exponent("X_" + std::to_string(i + 1) + " has a negative y/z exponent");
        }
        f.add_term(SemifieldElement(std::move(u)), c);
    }
    return f;
}

/// S R C R^{-1} S^{-1} G^T == I, exactly over the rationals.
inline bool check_cg_duality(const ClusterPattern& principal, const Seed& seed) {
    const std::size_t n = principal.rank();
    const auto s = principal.skew_symmetrizer();
    const auto& r = principal.pair().degrees();
    Matrix<Rational> sr(n, n, Rational(0)), sr_inv(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        sr(i, i) = Rational(s[i] * r[i]);
        sr_inv(i, i) = Rational(1) / sr(i, i);
    }
    const auto c = c_matrix(principal, seed).cast<Rational>();
    const auto g = g_matrix(principal, seed).cast<Rational>();
    return sr * c * sr_inv * g.transpose() == Matrix<Rational>::identity(n);
}

inline bool check_cg_duality(const ClusterPattern& principal, const Path& path) {
    return check_cg_duality(principal, principal.seed_at(path));
}

/// Principal-coefficient pattern sharing B_t0 and R with `general`.
inline ClusterPattern principal_companion(const ClusterPattern& general) {
    return ClusterPattern::principal(general.initial_matrix(), general.pair().degrees());
}

/**
 * Values in the general semifield of the principal generators: y_j maps to
 * y_{j;t0} and z_{i,s} to the general pattern's frozen coefficient z_{i,s}.
 */
inline std::vector<SemifieldElement> specialization(const ClusterPattern& general, const ClusterPattern& principal) {
    const auto& layout = detail::require_principal(principal);
    if (!(general.initial_matrix() == principal.initial_matrix()) ||
        general.pair().degrees() != principal.pair().degrees()) {
        throw argument_error("patterns do not share B_t0 and R");
    }
    std::vector<std::optional<SemifieldElement>> value(principal.semifield().rank());
    for (std::size_t j = 0; j < general.rank(); ++j) value[layout.y_generators[j]] = general.initial_coefficients()[j];
    for (std::size_t i = 0; i < general.rank(); ++i) {
        for (std::size_t s = 0; s < layout.z_generators[i].size(); ++s) {
            value[layout.z_generators[i][s]] = general.pair().frozen(i)[s];
        }
    }
    std::vector<SemifieldElement> out;
    for (auto& v : value) {
        if (!v) throw argument_error("principal generator without a specialization");
        out.push_back(std::move(*v));
    }
    return out;
}

/// F|_P: tropical evaluation of a subtraction-free polynomial.
inline SemifieldElement evaluate_tropical(const GroupRingElement& f, std::span<const SemifieldElement> values,
                                          std::size_t target_rank) {
    std::optional<SemifieldElement> acc;
    for (const auto& [m, c] : f.terms()) {
        if (c <= 0) throw argument_error("tropical evaluation needs positive coefficients");
        SemifieldElement term = SemifieldElement::identity(target_rank);
        for (std::size_t g = 0; g < m.rank(); ++g)
            if (m[g] != 0) term = term * values[g].pow(m[g]);
        acc = acc ? (*acc | term) : term;
    }
    if (!acc) throw argument_error("tropical evaluation of zero");
    return *acc;
}

struct Reconstruction {
    SemifieldElement y;
    LaurentPolynomial x;
};

/**
 * Rebuilds (y_{i;t}, x_{i;t}) of `general` from the c-, g-vectors and
 * F-polynomials of its principal companion at the same tree vertex:
 *
 *   y_{i;t} = prod_j y_{j;t0}^{c_ji} prod_j F_{j;t}|_P(y_t0, z)^{b_ji}
 *   x_{i;t} = x^{g_i} F_{i;t}(y_hat_t0, z) / F_{i;t}|_P(y_t0, z)
 *
 * `principal_seed` must be the principal companion's seed at that vertex;
 * its B equals B_t of the general pattern.
 */
inline Reconstruction separation_reconstruct(const ClusterPattern& general, const ClusterPattern& principal,
                                             const Seed& principal_seed, std::size_t i) {
    const std::size_t n = general.rank();
    const std::size_t m = general.semifield().rank();
    const auto& layout = detail::require_principal(principal);
    const auto values = specialization(general, principal);
    const auto c = c_matrix(principal, principal_seed);
    const auto g = g_vector(principal, principal_seed, i);
    const auto& b0 = general.initial_matrix();
    const auto& y0 = general.initial_coefficients();

    SemifieldElement y = SemifieldElement::identity(m);
    for (std::size_t j = 0; j < n; ++j) {
        y = y * y0[j].pow(c(j, i));
        const auto bji = principal_seed.b(j, i);
        if (bji != 0) y = y * evaluate_tropical(f_polynomial(principal, principal_seed, j), values, m).pow(bji);
    }

    const GroupRingElement f = f_polynomial(principal, principal_seed, i);
    LaurentPolynomial fx(n, m);
    for (const auto& [mono, coeff] : f.terms()) {
        ExponentVector x_exp(n, 0);
        SemifieldElement u = SemifieldElement::identity(m);
        for (std::size_t gen = 0; gen < mono.rank(); ++gen) {
            if (mono[gen] == 0) continue;
            u = u * values[gen].pow(mono[gen]);
        }
        // y_hat_j = y_j prod_l x_l^{b_lj}
        for (std::size_t j = 0; j < n; ++j) {
            const Exponent a = mono[layout.y_generators[j]];
            if (a == 0) continue;
            for (std::size_t l = 0; l < n; ++l) x_exp[l] += a * b0(l, j);
        }
        fx += LaurentPolynomial::monomial(x_exp, u, coeff);
    }
    const SemifieldElement f_trop = evaluate_tropical(f, values, m);
    LaurentPolynomial x = fx.shifted(g, f_trop.inverse());
    return {std::move(y), std::move(x)};
}

inline Reconstruction separation_reconstruct(const ClusterPattern& general, const ClusterPattern& principal,
                                             const Path& path, std::size_t i) {
    return separation_reconstruct(general, principal, principal.seed_at(path), i);
}

}  // namespace gca
