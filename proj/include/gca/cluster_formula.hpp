#pragma once

/**
 * @file cluster_formula.hpp
 * @brief Random-point verification of the cluster formula and det(H) = +-1.
 *
 * H^t_{t0} = diag(x_{t0}) J^t_{t0} diag(x_t^{-1}) with
 * J^t_{t0}(i, j) = d x_{j;t} / d x_{i;t0}. Both clusters are expanded over
 * the pattern's initial cluster, so J^t_{t0} = (J^{t0})^{-1} J^t where the
 * right-hand Jacobians are taken with respect to the initial variables
 * (chain rule). Everything is evaluated exactly at random rational points.
 */

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gca/errors.hpp"
#include "gca/laurent.hpp"
#include "gca/matrix.hpp"
#include "gca/pattern.hpp"
#include "gca/seed.hpp"

namespace gca {

struct ClusterFormulaReport {
    std::size_t trials = 0;
    std::size_t resamples = 0;
    std::size_t identity_failures = 0;
    std::size_t determinant_failures = 0;
    std::vector<std::string> violations;

    bool passed() const noexcept { return violations.empty(); }
};

namespace detail {

template <typename Rng>
Rational random_nonzero_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-12, 11);
    std::uniform_int_distribution<int> den(1, 7);
    int a = num(rng);
    if (a >= 0) ++a;  // skip zero
    return Rational(a) / Rational(den(rng));
}

inline Matrix<LaurentPolynomial> jacobian(const Seed& s) {
    const std::size_t n = s.size();
    Matrix<LaurentPolynomial> j(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) j(i, c) = partial_derivative(s.x[c], i);
    return j;
}

inline Matrix<Rational> evaluate(const Matrix<LaurentPolynomial>& m, std::span<const Rational> x,
                                 std::span<const Rational> u) {
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = gca::evaluate(m(i, j), x, u);
    return r;
}

}  // namespace detail

template <typename Rng>
ClusterFormulaReport check_cluster_formula(const ClusterPattern& pattern, const Path& t, const Path& t0,
                                           std::size_t trials, Rng& rng, std::size_t max_resamples = 1000) {
    const std::size_t n = pattern.rank();
    const std::size_t m = pattern.semifield().rank();
    const Seed st = pattern.seed_at(t);
    const Seed s0 = pattern.seed_at(t0);
    const auto jt = detail::jacobian(st);
    const auto j0 = detail::jacobian(s0);

    const auto degrees = pattern.pair().degrees();
    const auto s = find_skew_symmetrizer(IntMatrix::diagonal(degrees) * s0.b.matrix());
    Matrix<Rational> rs_inv(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) rs_inv(i, i) = Rational(1) / Rational(degrees[i] * s[i]);
    const Matrix<Rational> lhs_core = st.b.matrix().cast<Rational>() * rs_inv;
    const Matrix<Rational> rhs = s0.b.matrix().cast<Rational>() * rs_inv;

    ClusterFormulaReport report;
    while (report.trials < trials) {
        if (report.resamples > max_resamples) throw evaluation_error("cluster formula: too many degenerate points");
        std::vector<Rational> x(n), u(m);
        for (auto& v : x) v = detail::random_nonzero_rational(rng);
        for (auto& v : u) v = detail::random_nonzero_rational(rng);

        std::vector<Rational> xt(n), x0(n);
        bool degenerate = false;
        for (std::size_t i = 0; i < n && !degenerate; ++i) {
            xt[i] = gca::evaluate(st.x[i], x, u);
            x0[i] = gca::evaluate(s0.x[i], x, u);
            degenerate = xt[i] == 0 || x0[i] == 0;
        }
        Matrix<Rational> j0v;
        if (!degenerate) {
            j0v = detail::evaluate(j0, x, u);
            degenerate = determinant(j0v) == 0;
        }
        if (degenerate) {
            ++report.resamples;
            continue;
        }
        const Matrix<Rational> jac = inverse(j0v) * detail::evaluate(jt, x, u);
        Matrix<Rational> h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = x0[i] * jac(i, j) / xt[j];

        ++report.trials;
        if (h * lhs_core * h.transpose() != rhs) {
            ++report.identity_failures;
            std::ostringstream msg;
            msg << "trial " << report.trials << ": H (B_t R^-1 S^-1) H^T differs from B_t0 R^-1 S^-1";
            report.violations.push_back(msg.str());
        }
        const Rational det = determinant(h);
        if (det != 1 && det != -1) {
            ++report.determinant_failures;
            std::ostringstream msg;
            msg << "trial " << report.trials << ": det(H) = " << det;
            report.violations.push_back(msg.str());
        }
    }
    return report;
}

}  // namespace gca
