#pragma once

/**
 * @file pattern.hpp
 * @brief (R,z)-cluster patterns: an initial seed plus a mutation pair.
 *
 * Every seed of a pattern is obtained by applying a path of mutations to
 * the initial seed, and every cluster variable is stored as its Laurent
 * expansion in the initial cluster x_1..x_n.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gca/errors.hpp"
#include "gca/laurent.hpp"
#include "gca/seed.hpp"
#include "gca/semifield.hpp"

namespace gca {

/// Where y_1..y_n and the z_{i,s} live inside Trop(y, z) for principal coefficients.
struct PrincipalLayout {
    std::vector<std::size_t> y_generators;
    /// z_generators[i][s-1] is the generator index of z_{i,s}; reciprocal entries coincide.
    std::vector<std::vector<std::size_t>> z_generators;

    bool operator==(const PrincipalLayout&) const = default;
};

class ClusterPattern {
public:
    ClusterPattern(TropicalSemifield semifield, ExchangeMatrix b0, MutationPair pair, std::vector<SemifieldElement> y0)
        : semifield_(std::move(semifield)), b0_(std::move(b0)), pair_(std::move(pair)), y0_(std::move(y0)) {
        const std::size_t n = b0_.size();
        if (n == 0) throw argument_error("pattern rank must be positive");
        if (pair_.size() != n) throw dimension_error("mutation pair rank differs from exchange matrix");
        if (y0_.size() != n) throw dimension_error("need one initial coefficient per direction");
        if (pair_.semifield_rank() != semifield_.rank()) throw dimension_error("frozen coefficients over wrong semifield");
        for (const auto& y : y0_)
            if (y.rank() != semifield_.rank()) throw dimension_error("initial coefficient over wrong semifield");
        // R B must stay skew-symmetrizable for the cluster formula's S to exist.
        (void)find_skew_symmetrizer(IntMatrix::diagonal(pair_.degrees()) * b0_.matrix());
    }

    /**
     * Principal coefficients: P = Trop(y_1..y_n, z_{i,s}) with y_{t0} = y and
     * the frozen coefficients formal generators named z<i>_<s>,
     * s = 1..floor(r_i/2) (reciprocity identifies the rest).
     */
    static ClusterPattern principal(const ExchangeMatrix& b0, const std::vector<Exponent>& degrees) {
        const std::size_t n = b0.size();
        if (degrees.size() != n) throw dimension_error("degree vector length mismatch");
        std::vector<std::string> names;
        PrincipalLayout layout;
        for (std::size_t i = 0; i < n; ++i) {
            layout.y_generators.push_back(names.size());
            names.push_back("y" + std::to_string(i + 1));
        }
        std::vector<std::vector<std::size_t>> half(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (degrees[i] < 1) throw argument_error("mutation degree must be positive");
            for (Exponent s = 1; s <= degrees[i] / 2; ++s) {
                half[i].push_back(names.size());
                names.push_back("z" + std::to_string(i + 1) + "_" + std::to_string(s));
            }
        }
        TropicalSemifield field(std::move(names));
        std::vector<std::vector<SemifieldElement>> frozen(n);
        layout.z_generators.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Exponent r = degrees[i];
            for (Exponent s = 1; s < r; ++s) {
                const auto idx = half[i][static_cast<std::size_t>(std::min(s, r - s) - 1)];
                layout.z_generators[i].push_back(idx);
                frozen[i].push_back(field.generator(idx));
            }
        }
        std::vector<SemifieldElement> y0;
        for (std::size_t i = 0; i < n; ++i) y0.push_back(field.generator(layout.y_generators[i]));
        MutationPair pair(degrees, std::move(frozen), field.rank());
        ClusterPattern p(std::move(field), b0, std::move(pair), std::move(y0));
        p.principal_ = std::move(layout);
        return p;
    }

    /// Empty semifield: all coefficients and frozen coefficients are 1.
    static ClusterPattern coefficient_free(const ExchangeMatrix& b0, const std::vector<Exponent>& degrees) {
        TropicalSemifield field;
        auto pair = MutationPair::trivial_frozen(degrees, 0);
        std::vector<SemifieldElement> y0(b0.size(), SemifieldElement::identity(0));
        return ClusterPattern(std::move(field), b0, std::move(pair), std::move(y0));
    }

    std::size_t rank() const noexcept { return b0_.size(); }
    const TropicalSemifield& semifield() const noexcept { return semifield_; }
    const ExchangeMatrix& initial_matrix() const noexcept { return b0_; }
    const MutationPair& pair() const noexcept { return pair_; }
    const std::vector<SemifieldElement>& initial_coefficients() const noexcept { return y0_; }
    const std::optional<PrincipalLayout>& principal_layout() const noexcept { return principal_; }
    bool is_principal() const noexcept { return principal_.has_value(); }

    Seed initial_seed() const {
        Seed s;
        s.b = b0_;
        for (std::size_t i = 0; i < rank(); ++i) s.x.push_back(LaurentPolynomial::variable(rank(), semifield_.rank(), i));
        s.y = y0_;
        return s;
    }

    Seed seed_at(const Path& path) const { return apply_path(initial_seed(), pair_, path); }

    /// B_t alone, computed with integer mutations only.
    IntMatrix matrix_at(const Path& path) const {
        IntMatrix b = b0_.matrix();
        for (auto k : path) b = mutate_matrix(b, pair_.degrees(), k);
        return b;
    }

    /// Minimal skew-symmetrizer S of R B_{t0}.
    SkewSymmetrizer skew_symmetrizer() const {
        return find_skew_symmetrizer(IntMatrix::diagonal(pair_.degrees()) * b0_.matrix());
    }

    /// The same pattern with its initial seed moved to `path`: B_t and y_t
    /// become initial data and the cluster there becomes x_1..x_n.
    ClusterPattern rebased(const Path& path) const {
        Seed s = seed_at(path);
        return ClusterPattern(semifield_, s.b, pair_, s.y);
    }

    bool operator==(const ClusterPattern&) const = default;

private:
    TropicalSemifield semifield_;
    ExchangeMatrix b0_;
    MutationPair pair_;
    std::vector<SemifieldElement> y0_;
    std::optional<PrincipalLayout> principal_;
};

}  // namespace gca
