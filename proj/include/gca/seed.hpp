#pragma once

/**
 * @file seed.hpp
 * @brief Exchange matrices, mutation pairs and (R,z)-seed mutation.
 *
 * Convention: mutation in direction k reads column k of B, so
 * y_hat_k = y_k * prod_i x_i^{b_ik}. All indices are 0-based here; the CLI
 * translates from the 1-based directions used in configs and paths.
 *
 * Given a seed (B, x, y) and a mutation pair (R, z), mu_k produces
 *
 *   b'_ij = -b_ij                                    if i = k or j = k
 *         = b_ij + r_k (b_ik [-b_kj]_+ + [b_ik]_+ b_kj)  otherwise
 *   x'_k  = (sum_s z_{k,s} U^s V^{r_k - s}) / (x_k * Z_k|_P(y_k))
 *   y'_k  = y_k^{-1},   y'_i = y_i y_k^{r_k [b_ki]_+} Z_k|_P(y_k)^{-b_ki}
 *
 * with U = y_k prod x_i^{[b_ik]_+}, V = prod x_i^{[-b_ik]_+}. The sum over s is
 * V^{r_k} Z_k(y_hat_k) written without negative powers of cluster
 * variables, so x'_k is obtained by one exact division in the Laurent ring.
 */

#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gca/errors.hpp"
#include "gca/laurent.hpp"
#include "gca/matrix.hpp"
#include "gca/semifield.hpp"

namespace gca {

/// Sequence of mutation directions (0-based), read left to right.
using Path = std::vector<std::size_t>;

inline Exponent positive_part(Exponent v) { return v > 0 ? v : 0; }

/// Positive diagonal S with S * M skew-symmetric.
class SkewSymmetrizer {
public:
    SkewSymmetrizer() = default;
    explicit SkewSymmetrizer(std::vector<Exponent> diag) : diag_(std::move(diag)) {
        for (auto s : diag_)
            if (s < 1) throw argument_error("skew-symmetrizer entries must be positive");
    }

    std::size_t size() const noexcept { return diag_.size(); }
    Exponent operator[](std::size_t i) const { return diag_.at(i); }
    const std::vector<Exponent>& diag() const noexcept { return diag_; }
    IntMatrix matrix() const { return IntMatrix::diagonal(diag_); }

    bool symmetrizes(const IntMatrix& m) const { return (matrix() * m).is_skew_symmetric(); }

    bool operator==(const SkewSymmetrizer&) const = default;

private:
    std::vector<Exponent> diag_;
};

/**
 * Minimal skew-symmetrizer of `m`.
 *
 * Ratios s_j / s_i = -m_ij / m_ji are propagated over each connected
 * component of the nonzero pattern, then each component is scaled to the
 * smallest positive integers (gcd 1). Isolated indices get s = 1.
 */
inline SkewSymmetrizer find_skew_symmetrizer(const IntMatrix& m) {
    if (!m.is_square()) throw not_skew_symmetrizable("matrix is not square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != 0) throw not_skew_symmetrizable("nonzero diagonal entry at " + std::to_string(i + 1));
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto a = m(i, j), b = m(j, i);
            if ((a == 0) != (b == 0) || (a != 0 && (a > 0) == (b > 0))) {
                throw not_skew_symmetrizable("sign pattern violated at (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ")");
            }
        }
    }

    std::vector<std::optional<Rational>> ratio(n);
    std::vector<Exponent> result(n, 1);
    for (std::size_t root = 0; root < n; ++root) {
        if (ratio[root]) continue;
        std::vector<std::size_t> component{root};
        ratio[root] = Rational(1);
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (m(i, j) == 0) continue;
                // s_i m_ij = -s_j m_ji
                Rational sj = *ratio[i] * Rational(m(i, j)) / Rational(-m(j, i));
                if (!ratio[j]) {
                    ratio[j] = sj;
                    component.push_back(j);
                    queue.push_back(j);
                } else if (*ratio[j] != sj) {
                    throw not_skew_symmetrizable("inconsistent symmetrizer ratios around index " +
                                                 std::to_string(j + 1));
                }
            }
        }
        Integer denom_lcm = 1;
        for (auto j : component) denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(*ratio[j]));
        Integer num_gcd = 0;
        for (auto j : component) {
            Integer scaled = numerator(*ratio[j]) * (denom_lcm / denominator(*ratio[j]));
            num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
        }
        for (auto j : component) {
            Integer scaled = numerator(*ratio[j]) * (denom_lcm / denominator(*ratio[j])) / num_gcd;
            result[j] = scaled.convert_to<Exponent>();
        }
    }
    return SkewSymmetrizer(std::move(result));
}

/// Square skew-symmetrizable integer matrix with zero diagonal.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(IntMatrix m) : m_(std::move(m)) { (void)find_skew_symmetrizer(m_); }
    ExchangeMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : ExchangeMatrix(IntMatrix(rows)) {}

    /// Skips validation; for results of operations that preserve the invariant.
    static ExchangeMatrix trusted(IntMatrix m) {
        ExchangeMatrix b;
        b.m_ = std::move(m);
        return b;
    }

    std::size_t size() const noexcept { return m_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const noexcept { return m_; }

    ExchangeMatrix permuted(const std::vector<std::size_t>& perm) const { return trusted(m_.permuted(perm)); }

    bool operator==(const ExchangeMatrix&) const = default;

private:
    IntMatrix m_;
};

/**
 * Mutation degrees r_i and frozen coefficients z_{i,s}, s = 1..r_i-1.
 *
 * Reciprocity z_{i,s} = z_{i,r_i-s} is checked on construction; the
 * implicit z_{i,0} = z_{i,r_i} = 1 appear in polynomial_coefficients().
 */
class MutationPair {
public:
    MutationPair() = default;

    MutationPair(std::vector<Exponent> degrees, std::vector<std::vector<SemifieldElement>> frozen,
                 std::size_t semifield_rank)
        : degrees_(std::move(degrees)), frozen_(std::move(frozen)), semifield_rank_(semifield_rank) {
        if (frozen_.size() != degrees_.size()) throw argument_error("one frozen list per direction required");
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            const auto r = degrees_[i];
            const auto label = "direction " + std::to_string(i + 1);
            if (r < 1) throw argument_error(label + ": mutation degree must be positive");
            if (frozen_[i].size() != static_cast<std::size_t>(r - 1)) {
                throw argument_error(label + ": expected " + std::to_string(r - 1) + " frozen coefficients");
            }
            for (const auto& z : frozen_[i])
                if (z.rank() != semifield_rank_) throw dimension_error(label + ": frozen coefficient rank mismatch");
            for (std::size_t s = 1; s < static_cast<std::size_t>(r); ++s) {
                if (frozen_[i][s - 1] != frozen_[i][r - s - 1]) {
                    throw argument_error(label + ": reciprocity z_s = z_{r-s} fails at s = " + std::to_string(s));
                }
            }
        }
    }

    /// R = I, no frozen coefficients.
    static MutationPair classic(std::size_t n, std::size_t semifield_rank) {
        return MutationPair(std::vector<Exponent>(n, 1), std::vector<std::vector<SemifieldElement>>(n), semifield_rank);
    }

    /// Degrees given, every frozen coefficient equal to 1.
    static MutationPair trivial_frozen(std::vector<Exponent> degrees, std::size_t semifield_rank) {
        std::vector<std::vector<SemifieldElement>> z;
        for (auto r : degrees) {
            z.emplace_back(static_cast<std::size_t>(r > 0 ? r - 1 : 0), SemifieldElement::identity(semifield_rank));
        }
        return MutationPair(std::move(degrees), std::move(z), semifield_rank);
    }

    std::size_t size() const noexcept { return degrees_.size(); }
    std::size_t semifield_rank() const noexcept { return semifield_rank_; }
    Exponent degree(std::size_t i) const { return degrees_.at(i); }
    const std::vector<Exponent>& degrees() const noexcept { return degrees_; }
    const std::vector<SemifieldElement>& frozen(std::size_t i) const { return frozen_.at(i); }

    /// Coefficients (1, z_{i,1}, ..., z_{i,r_i-1}, 1) of Z_i.
    std::vector<SemifieldElement> polynomial_coefficients(std::size_t i) const {
        std::vector<SemifieldElement> c;
        c.reserve(frozen_.at(i).size() + 2);
        c.push_back(SemifieldElement::identity(semifield_rank_));
        c.insert(c.end(), frozen_[i].begin(), frozen_[i].end());
        c.push_back(SemifieldElement::identity(semifield_rank_));
        return c;
    }

    /// Relabeling: direction i of the result is direction perm[i] of this.
    MutationPair permuted(const std::vector<std::size_t>& perm) const {
        MutationPair p;
        p.semifield_rank_ = semifield_rank_;
        for (auto j : perm) {
            p.degrees_.push_back(degrees_[j]);
            p.frozen_.push_back(frozen_[j]);
        }
        return p;
    }

    bool operator==(const MutationPair&) const = default;

private:
    std::vector<Exponent> degrees_;
    std::vector<std::vector<SemifieldElement>> frozen_;
    std::size_t semifield_rank_ = 0;
};

/// A labeled seed (B, x, y); x is expanded over the pattern's initial cluster.
struct Seed {
    ExchangeMatrix b;
    std::vector<LaurentPolynomial> x;
    std::vector<SemifieldElement> y;

    std::size_t size() const noexcept { return x.size(); }

    /// Position i of the result holds component perm[i] of this seed.
    Seed permuted(const std::vector<std::size_t>& perm) const {
        Seed s;
        s.b = b.permuted(perm);
        for (auto j : perm) {
            s.x.push_back(x[j]);
            s.y.push_back(y[j]);
        }
        return s;
    }

    bool operator==(const Seed&) const = default;
};

/// Matrix mutation on a raw integer matrix; degrees supply r_k.
inline IntMatrix mutate_matrix(const IntMatrix& b, std::span<const Exponent> degrees, std::size_t k) {
    const std::size_t n = b.rows();
    if (k >= n) throw argument_error("mutation direction out of range");
    if (degrees.size() != n) throw dimension_error("degree vector length mismatch");
    IntMatrix out(n, n);
    const Exponent r = degrees[k];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
            } else {
                const Exponent t = checked_add(checked_mul(b(i, k), positive_part(-b(k, j))),
                                               checked_mul(positive_part(b(i, k)), b(k, j)));
                out(i, j) = checked_add(b(i, j), checked_mul(r, t));
            }
        }
    }
    return out;
}

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, const MutationPair& pair, std::size_t k) {
    return ExchangeMatrix::trusted(mutate_matrix(b.matrix(), pair.degrees(), k));
}

/// Whether mu_k(B) R equals the classic mutation of B R at k.
inline bool check_classic_compat(const IntMatrix& b, std::span<const Exponent> degrees, std::size_t k) {
    const IntMatrix r = IntMatrix::diagonal(std::vector<Exponent>(degrees.begin(), degrees.end()));
    const std::vector<Exponent> ones(degrees.size(), 1);
    return mutate_matrix(b, degrees, k) * r == mutate_matrix(b * r, ones, k);
}

/// y_hat_k as the fraction U / V of the Laurent polynomials above.
struct ExchangeMonomials {
    LaurentPolynomial numerator;    // U = y_k prod x_i^{[b_ik]_+}
    LaurentPolynomial denominator;  // V = prod x_i^{[-b_ik]_+}
};

inline ExchangeMonomials exchange_monomials(const Seed& seed, std::size_t k) {
    const std::size_t n = seed.size();
    if (k >= n) throw argument_error("mutation direction out of range");
    const auto& x0 = seed.x.front();
    LaurentPolynomial u = LaurentPolynomial::monomial(ExponentVector(n, 0), seed.y[k]);
    LaurentPolynomial v = LaurentPolynomial::one(x0.rank(), x0.coefficient_rank());
    for (std::size_t i = 0; i < n; ++i) {
        const auto b = seed.b(i, k);
        if (b > 0) u *= seed.x[i].pow(b);
        if (b < 0) v *= seed.x[i].pow(-b);
    }
    return {std::move(u), std::move(v)};
}

/// y_hat_k expanded in the initial cluster. Throws not_laurent when the
/// expansion leaves the Laurent ring (possible away from the initial seed).
inline LaurentPolynomial hat_y(const Seed& seed, std::size_t k) {
    auto [u, v] = exchange_monomials(seed, k);
    return exact_div(u, v);
}

inline void require_consistent(const Seed& seed, const MutationPair& pair) {
    const std::size_t n = seed.size();
    if (seed.b.size() != n || seed.y.size() != n || pair.size() != n) {
        throw dimension_error("seed and mutation pair ranks differ");
    }
    for (const auto& y : seed.y)
        if (y.rank() != pair.semifield_rank()) throw dimension_error("coefficient semifield mismatch");
}

inline Seed mutate_seed(const Seed& seed, const MutationPair& pair, std::size_t k) {
    require_consistent(seed, pair);
    const std::size_t n = seed.size();
    if (k >= n) throw argument_error("mutation direction out of range");
    const Exponent r = pair.degree(k);
    const auto coeffs = pair.polynomial_coefficients(k);
    const SemifieldElement& yk = seed.y[k];

    auto [u, v] = exchange_monomials(seed, k);
    std::vector<LaurentPolynomial> u_pow{LaurentPolynomial::one(u.rank(), u.coefficient_rank())};
    std::vector<LaurentPolynomial> v_pow{u_pow.front()};
    for (Exponent s = 1; s <= r; ++s) {
        u_pow.push_back(u_pow.back() * u);
        v_pow.push_back(v_pow.back() * v);
    }
    LaurentPolynomial numerator(u.rank(), u.coefficient_rank());
    for (Exponent s = 0; s <= r; ++s) {
        numerator += (u_pow[s] * v_pow[r - s]).scaled(coeffs[s]);
    }
    const SemifieldElement z_at_y = eval_poly_tropical(coeffs, yk);

    Seed out;
    out.b = mutate_matrix(seed.b, pair, k);
    out.x = seed.x;
    out.x[k] = exact_div(numerator.scaled(z_at_y.inverse()), seed.x[k]);
    out.y = seed.y;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) {
            out.y[i] = yk.inverse();
        } else {
            const auto bki = seed.b(k, i);
            out.y[i] = seed.y[i] * yk.pow(r * positive_part(bki)) * z_at_y.pow(-bki);
        }
    }
    return out;
}

inline Seed apply_path(Seed seed, const MutationPair& pair, const Path& path) {
    for (auto k : path) seed = mutate_seed(seed, pair, k);
    return seed;
}

/// Removes immediate back-and-forth steps (k, k).
inline Path reduce_walk(const Path& walk) {
    Path out;
    for (auto k : walk) {
        if (!out.empty() && out.back() == k) {
            out.pop_back();
        } else {
            out.push_back(k);
        }
    }
    return out;
}

/// Tree walk from vertex `from` to vertex `to`, both given as paths from t0.
inline Path walk_between(const Path& from, const Path& to) {
    Path walk(from.rbegin(), from.rend());
    walk.insert(walk.end(), to.begin(), to.end());
    return reduce_walk(walk);
}

}  // namespace gca
