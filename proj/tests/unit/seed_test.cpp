/**
 * @file seed_test.cpp
 * @brief Seed mutation, exchange monomials and the cluster formula.
 */

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "gca/cluster_formula.hpp"
#include "gca/pattern.hpp"
#include "gca/seed.hpp"
#include "random_patterns.hpp"

using namespace gca;

namespace {

const ExchangeMatrix a2{{0, 1}, {-1, 0}};

/// Generalized rank-2 example over Trop(z) with trivial y and z_{1,1} = z.
ClusterPattern rank2_trivial_y() {
    TropicalSemifield field({"z"});
    MutationPair pair({2, 1}, {{field.generator(0)}, {}}, 1);
    return ClusterPattern(field, a2, pair, {field.one(), field.one()});
}

}  // namespace

TEST(SkewSymmetrizer, Examples) {
    EXPECT_EQ(find_skew_symmetrizer(IntMatrix{{0, 2}, {-1, 0}}).diag(), (std::vector<Exponent>{1, 2}));
    EXPECT_EQ(find_skew_symmetrizer(IntMatrix{{0, 3, -1}, {-3, 0, 2}, {1, -2, 0}}).diag(),
              (std::vector<Exponent>{1, 1, 1}));
    EXPECT_THROW(find_skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}), not_skew_symmetrizable);
    // Inconsistent cycle: s2 = s1, s3 = s2, s1 = 2 s3.
    EXPECT_THROW(find_skew_symmetrizer(IntMatrix{{0, 1, -2}, {-1, 0, 1}, {1, -1, 0}}), not_skew_symmetrizable);
    EXPECT_THROW(find_skew_symmetrizer(IntMatrix{{1, 0}, {0, 0}}), not_skew_symmetrizable);
    EXPECT_EQ(find_skew_symmetrizer(IntMatrix{{0, 0}, {0, 0}}).diag(), (std::vector<Exponent>{1, 1}));
}

TEST(SkewSymmetrizer, RandomMatricesAreSymmetrized) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const auto b = fixtures::random_exchange_matrix(4, rng);
        const auto s = find_skew_symmetrizer(b);
        ASSERT_TRUE(s.symmetrizes(b));
        for (auto v : s.diag()) ASSERT_GE(v, 1);
    }
}

TEST(MutationPair, ValidatesReciprocity) {
    TropicalSemifield f({"a", "b"});
    EXPECT_NO_THROW(MutationPair({3}, {{f.generator(0), f.generator(0)}}, 2));
    EXPECT_THROW(MutationPair({3}, {{f.generator(0), f.generator(1)}}, 2), argument_error);
    EXPECT_THROW(MutationPair({2}, {{}}, 2), argument_error);
    EXPECT_THROW(MutationPair({0}, {{}}, 2), argument_error);
    const auto pair = MutationPair::classic(2, 0);
    EXPECT_EQ(pair.polynomial_coefficients(0).size(), 2u);
}

TEST(MutateMatrix, Examples) {
    const std::vector<Exponent> r{2, 1};
    EXPECT_EQ(mutate_matrix(a2.matrix(), r, 0), (IntMatrix{{0, -1}, {1, 0}}));
    EXPECT_EQ(mutate_matrix(mutate_matrix(a2.matrix(), r, 0), r, 0), a2.matrix());
    const IntMatrix a3{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    EXPECT_EQ(mutate_matrix(a3, std::vector<Exponent>{1, 1, 1}, 1), (IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST(MutateMatrix, ClassicCompatibility) {
    EXPECT_TRUE(check_classic_compat(a2.matrix(), std::vector<Exponent>{2, 1}, 0));
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Exponent> rd(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto b = fixtures::random_exchange_matrix(4, rng);
        std::vector<Exponent> r(4), ones(4, 1);
        for (auto& v : r) v = rd(rng);
        for (std::size_t k = 0; k < 4; ++k) {
            ASSERT_TRUE(check_classic_compat(b, r, k));
            ASSERT_TRUE(check_classic_compat(b, ones, k));
        }
    }
}

TEST(HatY, Examples) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    const auto s = p.initial_seed();
    const auto& f = p.semifield();
    EXPECT_EQ(hat_y(s, 0).to_string(f), "y1*x2^-1");
    EXPECT_EQ(hat_y(s, 1).to_string(f), "y2*x1");
    const auto zero_column = ClusterPattern::principal(ExchangeMatrix{{0, 0}, {0, 0}}, {1, 1});
    EXPECT_EQ(hat_y(zero_column.initial_seed(), 0).to_string(zero_column.semifield()), "y1");
}

TEST(MutateSeed, ClassicA2Principal) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    const auto s = p.seed_at({0});
    const auto& f = p.semifield();
    EXPECT_EQ(s.x[0].to_string(f), "x1^-1*x2 + y1*x1^-1");
    EXPECT_EQ(f.render(s.y[0]), "y1^-1");
    EXPECT_EQ(f.render(s.y[1]), "y1*y2");
    EXPECT_EQ(s.b.matrix(), (IntMatrix{{0, -1}, {1, 0}}));
}

TEST(MutateSeed, GeneralizedRank2TrivialCoefficients) {
    const auto p = rank2_trivial_y();
    const auto s = p.seed_at({0});
    EXPECT_EQ(s.x[0].to_string(p.semifield()), "x1^-1*x2^2 + z*x1^-1*x2 + x1^-1");
    // Same thing assembled from independent arithmetic: (1 + z x2 + x2^2) / x1.
    const auto x1 = LaurentPolynomial::variable(2, 1, 0), x2 = LaurentPolynomial::variable(2, 1, 1);
    const auto z = LaurentPolynomial::monomial(std::vector<Exponent>{0, 0}, p.semifield().generator(0));
    EXPECT_EQ(s.x[0] * x1, LaurentPolynomial::one(2, 1) + z * x2 + x2 * x2);
}

TEST(MutateSeed, GeneralizedRank2Principal) {
    const auto p = ClusterPattern::principal(a2, {2, 1});
    const auto s = p.seed_at({0});
    const auto& f = p.semifield();
    EXPECT_EQ(s.x[0].to_string(f), "x1^-1*x2^2 + y1*z1_1*x1^-1*x2 + y1^2*x1^-1");
    EXPECT_EQ(f.render(s.y[0]), "y1^-1");
    EXPECT_EQ(f.render(s.y[1]), "y1^2*y2");
}

TEST(MutateSeed, Involution) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = fixtures::random_pattern(3, 2, rng);
        const auto s = p.seed_at(fixtures::random_path(3, 1, rng));
        for (std::size_t k = 0; k < 3; ++k) ASSERT_EQ(mutate_seed(mutate_seed(s, p.pair(), k), p.pair(), k), s);
    }
}

TEST(MutateSeed, AgreesWithNumericExchangeRelation) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = fixtures::random_pattern(3, 2, rng);
        const auto path = fixtures::random_path(3, 3, rng);
        std::vector<Rational> x{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                Rational(num(rng), den(rng))};
        std::vector<Rational> u{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        fixtures::NumericSeed ns{p.initial_matrix().matrix(), x, {}};
        for (const auto& y : p.initial_coefficients()) ns.y.emplace_back(y.exponents().begin(), y.exponents().end());
        Seed s = p.initial_seed();
        for (auto k : path) {
            ns = fixtures::numeric_mutate(ns, p.pair(), k, u);
            s = mutate_seed(s, p.pair(), k);
            ASSERT_EQ(s.b.matrix(), ns.b);
            for (std::size_t i = 0; i < 3; ++i) {
                ASSERT_EQ(evaluate(s.x[i], x, u), ns.x[i]);
                ASSERT_TRUE(std::ranges::equal(s.y[i].exponents(), ns.y[i]));
            }
        }
    }
}

TEST(ApplyPath, Examples) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    const auto s0 = p.initial_seed();
    EXPECT_EQ(p.seed_at({}), s0);
    EXPECT_EQ(p.seed_at({0, 0}), s0);
    EXPECT_EQ(p.seed_at({0, 1, 0, 1, 0}), s0.permuted({1, 0}));
    // Coefficient-free A2 closes the same way.
    const auto cf = ClusterPattern::coefficient_free(a2, {1, 1});
    EXPECT_EQ(cf.seed_at({0, 1, 0, 1, 0}), cf.initial_seed().permuted({1, 0}));
}

TEST(Walks, ReduceAndBetween) {
    EXPECT_EQ(reduce_walk({0, 1, 1, 0, 2}), (Path{2}));
    EXPECT_EQ(walk_between({0, 1}, {0, 2}), (Path{1, 2}));
}

TEST(Pattern, SkewSymmetryPreservedAlongPaths) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = fixtures::random_pattern(4, 1, rng);
        const auto s = p.skew_symmetrizer();
        const auto r = IntMatrix::diagonal(p.pair().degrees());
        const auto b = p.matrix_at(fixtures::random_path(4, 6, rng));
        ASSERT_TRUE((s.matrix() * r * b).is_skew_symmetric());
    }
}

TEST(MutateMatrix, OverflowIsReported) {
    const Exponent big = Exponent{1} << 40;
    const IntMatrix b{{0, big, 0}, {-big, 0, big}, {0, -big, 0}};
    const std::vector<Exponent> ones{1, 1, 1};
    EXPECT_THROW(mutate_matrix(b, ones, 1), overflow_error);
    EXPECT_THROW(b * b, overflow_error);
}

TEST(ClusterFormula, IdentityAtInitialSeed) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    std::mt19937_64 rng(41);
    const auto report = check_cluster_formula(p, {}, {}, 5, rng);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.trials, 5u);
}

TEST(ClusterFormula, ClassicA2OneStep) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    std::mt19937_64 rng(43);
    const auto report = check_cluster_formula(p, {0}, {}, 20, rng);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.trials, 20u);
}

TEST(ClusterFormula, GeneralizedRank2DepthThree) {
    const auto p = ClusterPattern::principal(a2, {2, 1});
    std::mt19937_64 rng(47);
    const auto report = check_cluster_formula(p, {0, 1, 0}, {}, 20, rng);
    EXPECT_TRUE(report.passed());
    const auto between = check_cluster_formula(p, {0, 1, 0}, {1}, 20, rng);
    EXPECT_TRUE(between.passed());
}
