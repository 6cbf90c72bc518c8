#pragma once

/**
 * @file random_patterns.hpp
 * @brief Random skew-symmetrizable patterns and a numeric mutation oracle
 *        shared by the unit tests and the acceptance binary.
 */

#include <random>
#include <vector>

#include "gca/gca.hpp"

namespace gca::fixtures {

/// b_ij = c_ij s_j, b_ji = -c_ij s_i for random s and c, so S B is skew.
template <typename Rng>
IntMatrix random_exchange_matrix(std::size_t n, Rng& rng, int max_c = 1, int max_s = 2) {
    std::uniform_int_distribution<int> sdist(1, max_s), cdist(-max_c, max_c);
    std::vector<Exponent> s(n);
    for (auto& v : s) v = sdist(rng);
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Exponent c = cdist(rng);
            b(i, j) = c * s[j];
            b(j, i) = -c * s[i];
        }
    return b;
}

template <typename Rng>
SemifieldElement random_monomial(std::size_t rank, Rng& rng, int spread = 2) {
    std::uniform_int_distribution<int> d(-spread, spread);
    std::vector<Exponent> e(rank);
    for (auto& v : e) v = d(rng);
    return SemifieldElement(std::move(e));
}

/// Random pattern over Trop(u1..um): random degrees r_i <= max_r, reciprocal random z, random y0.
template <typename Rng>
ClusterPattern random_pattern(std::size_t n, std::size_t m, Rng& rng, Exponent max_r = 3) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("u" + std::to_string(i + 1));
    TropicalSemifield field(names);
    std::uniform_int_distribution<Exponent> rdist(1, max_r);
    std::vector<Exponent> r(n);
    for (auto& v : r) v = rdist(rng);
    std::vector<std::vector<SemifieldElement>> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i].assign(static_cast<std::size_t>(r[i] - 1), field.one());
        for (Exponent s = 1; 2 * s <= r[i]; ++s) {
            const auto v = random_monomial(m, rng);
            z[i][static_cast<std::size_t>(s - 1)] = v;
            z[i][static_cast<std::size_t>(r[i] - s - 1)] = v;
        }
    }
    std::vector<SemifieldElement> y0;
    for (std::size_t i = 0; i < n; ++i) y0.push_back(random_monomial(m, rng));
    MutationPair pair(r, std::move(z), m);
    return ClusterPattern(std::move(field), ExchangeMatrix(random_exchange_matrix(n, rng)), std::move(pair),
                          std::move(y0));
}

template <typename Rng>
Path random_path(std::size_t n, std::size_t length, Rng& rng) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    Path p;
    while (p.size() < length) {
        const auto k = d(rng);
        if (!p.empty() && p.back() == k) continue;
        p.push_back(k);
    }
    return p;
}

inline Rational rational_power(const Rational& base, Exponent e) {
    Rational out(1);
    const Rational b = e < 0 ? Rational(1) / base : base;
    for (Exponent i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
    return out;
}

inline Rational evaluate_monomial(const SemifieldElement& m, const std::vector<Rational>& u) {
    Rational out(1);
    for (std::size_t g = 0; g < m.rank(); ++g) out *= rational_power(u[g], m[g]);
    return out;
}

/**
 * Cluster values at a point, mutated directly with rational arithmetic from
 * the exchange relation
 *   x'_k x_k Z_k|_P(y_k) = sum_s z_{k,s} (y_k prod x_i^{[b_ik]+})^s (prod x_i^{[-b_ik]+})^{r_k - s},
 * with the tropical Z_k|_P and coefficient mutation recomputed here from
 * exponent vectors. No Laurent polynomials are involved.
 */
struct NumericSeed {
    IntMatrix b;
    std::vector<Rational> x;
    std::vector<std::vector<Exponent>> y;
};

inline NumericSeed numeric_mutate(const NumericSeed& s, const MutationPair& pair, std::size_t k,
                                  const std::vector<Rational>& u) {
    const std::size_t n = s.x.size();
    const Exponent r = pair.degree(k);
    const auto coeffs = pair.polynomial_coefficients(k);
    // Z_k|_P(y_k): min over s of exponents of z_s y_k^s.
    std::vector<Exponent> trop;
    for (Exponent st = 0; st <= r; ++st) {
        std::vector<Exponent> e(s.y[k].size());
        for (std::size_t g = 0; g < e.size(); ++g) e[g] = coeffs[st][g] + st * s.y[k][g];
        if (trop.empty()) {
            trop = e;
        } else {
            for (std::size_t g = 0; g < e.size(); ++g) trop[g] = std::min(trop[g], e[g]);
        }
    }
    Rational uu(1), vv(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.b(i, k) > 0) uu *= rational_power(s.x[i], s.b(i, k));
        if (s.b(i, k) < 0) vv *= rational_power(s.x[i], -s.b(i, k));
    }
    const Rational yk = evaluate_monomial(SemifieldElement(s.y[k]), u);
    Rational sum(0);
    for (Exponent st = 0; st <= r; ++st) {
        sum += evaluate_monomial(coeffs[st], u) * rational_power(yk * uu, st) * rational_power(vv, r - st);
    }
    NumericSeed out = s;
    out.x[k] = sum / (s.x[k] * evaluate_monomial(SemifieldElement(trop), u));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) {
            for (auto& e : out.y[k]) e = -e;
            continue;
        }
        const Exponent bki = s.b(k, i);
        for (std::size_t g = 0; g < out.y[i].size(); ++g) {
            out.y[i][g] = s.y[i][g] + r * std::max<Exponent>(bki, 0) * s.y[k][g] - bki * trop[g];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out.b(i, j) = -s.b(i, j);
            } else {
                out.b(i, j) = s.b(i, j) + r * (s.b(i, k) * std::max<Exponent>(-s.b(k, j), 0) +
                                               std::max<Exponent>(s.b(i, k), 0) * s.b(k, j));
            }
        }
    return out;
}

}  // namespace gca::fixtures
