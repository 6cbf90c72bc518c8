#pragma once

/**
 * @file laurent.hpp
 * @brief Exact sparse Laurent polynomials in n cluster directions over ZP.
 *
 * A LaurentPolynomial over Trop(u_1..u_m) is stored flat: each term is an
 * exponent vector of length n + m (cluster exponents first, then the
 * exponents of the ZP monomial) mapped to a nonzero integer. Grouping the
 * terms by their first n exponents recovers the "x-monomial times ZP
 * coefficient" view, see coefficient().
 *
 * Term order: graded lexicographic on the x-part, ties broken
 * lexicographically on the u-part. This is a monomial order, so it also
 * drives exact division.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gca/errors.hpp"
#include "gca/semifield.hpp"

namespace gca {

using ExponentVector = std::vector<Exponent>;

/// Denominator vector: entry j is minus the least exponent of x_j.
using DVector = std::vector<Exponent>;

namespace detail {

struct TermOrder {
    std::size_t n = 0;

    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        Exponent da = 0, db = 0;
        for (std::size_t i = 0; i < n; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline Rational rational_pow(const Rational& base, Exponent e) {
    if (e < 0) return rational_pow(Rational(1) / base, -e);
    Rational result(1), b = base;
    auto k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1u) result *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return result;
}

}  // namespace detail

class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Integer, detail::TermOrder>;

    LaurentPolynomial() : terms_(detail::TermOrder{0}) {}
    LaurentPolynomial(std::size_t rank, std::size_t coefficient_rank)
        : rank_(rank), coefficient_rank_(coefficient_rank), terms_(detail::TermOrder{rank}) {}

    static LaurentPolynomial constant(std::size_t rank, std::size_t coefficient_rank, const Integer& c) {
        LaurentPolynomial p(rank, coefficient_rank);
        p.add_term(ExponentVector(rank + coefficient_rank, 0), c);
        return p;
    }

    static LaurentPolynomial one(std::size_t rank, std::size_t coefficient_rank) {
        return constant(rank, coefficient_rank, 1);
    }

    /// The cluster variable x_i (0-based).
    static LaurentPolynomial variable(std::size_t rank, std::size_t coefficient_rank, std::size_t i) {
        if (i >= rank) throw argument_error("variable index out of range");
        ExponentVector e(rank + coefficient_rank, 0);
        e[i] = 1;
        LaurentPolynomial p(rank, coefficient_rank);
        p.add_term(std::move(e), 1);
        return p;
    }

    /// c * u^coeff * x^x_exponents.
    static LaurentPolynomial monomial(std::span<const Exponent> x_exponents, const SemifieldElement& coeff,
                                      const Integer& c = 1) {
        LaurentPolynomial p(x_exponents.size(), coeff.rank());
        ExponentVector e(x_exponents.begin(), x_exponents.end());
        e.insert(e.end(), coeff.exponents().begin(), coeff.exponents().end());
        p.add_term(std::move(e), c);
        return p;
    }

    static LaurentPolynomial from_group_ring(std::size_t rank, const GroupRingElement& g) {
        LaurentPolynomial p(rank, g.rank());
        for (const auto& [m, c] : g.terms()) {
            ExponentVector e(rank, 0);
            e.insert(e.end(), m.exponents().begin(), m.exponents().end());
            p.add_term(std::move(e), c);
        }
        return p;
    }

    std::size_t rank() const noexcept { return rank_; }
    std::size_t coefficient_rank() const noexcept { return coefficient_rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    void add_term(ExponentVector e, const Integer& c) {
        if (e.size() != rank_ + coefficient_rank_) throw dimension_error("term exponent vector has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// The ZP coefficient of x^x_exponents.
    GroupRingElement coefficient(std::span<const Exponent> x_exponents) const {
        if (x_exponents.size() != rank_) throw dimension_error("x exponent vector has wrong length");
        GroupRingElement g(coefficient_rank_);
        for (const auto& [e, c] : terms_) {
            if (!std::equal(x_exponents.begin(), x_exponents.end(), e.begin())) continue;
            g.add_term(SemifieldElement(ExponentVector(e.begin() + rank_, e.end())), c);
        }
        return g;
    }

    /// Groups terms as (x exponents) -> ZP coefficient.
    std::map<ExponentVector, GroupRingElement> grouped_terms() const {
        std::map<ExponentVector, GroupRingElement> out;
        for (const auto& [e, c] : terms_) {
            ExponentVector x(e.begin(), e.begin() + rank_);
            auto [it, _] = out.try_emplace(std::move(x), GroupRingElement(coefficient_rank_));
            it->second.add_term(SemifieldElement(ExponentVector(e.begin() + rank_, e.end())), c);
        }
        return out;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& b) {
        require_compatible(b);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& b) {
        require_compatible(b);
        for (const auto& [e, c] : b.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator-(LaurentPolynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_compatible(b);
        LaurentPolynomial r(a.rank_, a.coefficient_rank_);
        ExponentVector e(a.rank_ + a.coefficient_rank_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

    /// Integer power; negative powers only for monomials with unit coefficient.
    LaurentPolynomial pow(Exponent k) const {
        if (k < 0) {
            if (!is_monomial() || abs(terms_.begin()->second) != 1) {
                throw argument_error("negative power of a non-monomial Laurent polynomial");
            }
            ExponentVector e = terms_.begin()->first;
            const Integer& c = terms_.begin()->second;
            for (auto& v : e) v *= k;
            LaurentPolynomial r(rank_, coefficient_rank_);
            r.add_term(std::move(e), (k % 2 == 0) ? Integer(1) : c);
            return r;
        }
        LaurentPolynomial result = one(rank_, coefficient_rank_);
        LaurentPolynomial base = *this;
        auto n = static_cast<std::uint64_t>(k);
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return result;
    }

    /// Multiplication by the monomial x^x_shift * u^u_shift.
    LaurentPolynomial shifted(std::span<const Exponent> x_shift, const SemifieldElement& u_shift) const {
        if (x_shift.size() != rank_ || u_shift.rank() != coefficient_rank_) {
            throw dimension_error("shift has wrong dimensions");
        }
        LaurentPolynomial r(rank_, coefficient_rank_);
        for (const auto& [key, c] : terms_) {
            ExponentVector e = key;
            for (std::size_t i = 0; i < rank_; ++i) e[i] += x_shift[i];
            for (std::size_t j = 0; j < coefficient_rank_; ++j) e[rank_ + j] += u_shift[j];
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    }

    /// Multiplication by an invertible element of the coefficient semifield.
    LaurentPolynomial scaled(const SemifieldElement& u) const {
        return shifted(ExponentVector(rank_, 0), u);
    }

    bool operator==(const LaurentPolynomial& b) const {
        return rank_ == b.rank_ && coefficient_rank_ == b.coefficient_rank_ && terms_ == b.terms_;
    }

    /// Numeric canonical serialization used for identity comparisons and hashing.
    std::string key() const {
        std::string out;
        out.reserve(terms_.size() * (rank_ + coefficient_rank_) * 3);
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                out += std::to_string(e[i]);
                out += (i + 1 == rank_) ? ';' : ',';
            }
            out += c.str();
            out += '|';
        }
        return out;
    }

    /// Human-readable rendering: x-monomials in descending graded-lex order,
    /// ZP factors ascending lexicographic within a shared x-monomial.
    std::string to_string(const TropicalSemifield& field, std::string_view prefix = "x") const {
        if (field.rank() != coefficient_rank_) throw dimension_error("semifield does not match polynomial");
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        const detail::TermOrder x_order{rank_};
        std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
            ExponentVector xa(a->first.begin(), a->first.begin() + rank_);
            ExponentVector xb(b->first.begin(), b->first.begin() + rank_);
            if (xa != xb) return x_order(xb, xa);
            return std::lexicographical_compare(a->first.begin() + rank_, a->first.end(), b->first.begin() + rank_,
                                                b->first.end());
        });
        std::ostringstream out;
        bool first_term = true;
        for (const auto* term : order) {
            const auto& [e, c] = *term;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first_term) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first_term = false;
            std::ostringstream mono;
            bool first = true;
            for (std::size_t j = 0; j < coefficient_rank_; ++j)
                detail::write_power(mono, field.generators()[j], e[rank_ + j], first);
            for (std::size_t i = 0; i < rank_; ++i)
                detail::write_power(mono, std::string(prefix) + std::to_string(i + 1), e[i], first);
            if (first) {
                out << mag;
            } else if (mag == 1) {
                out << mono.str();
            } else {
                out << mag << '*' << mono.str();
            }
        }
        return out.str();
    }

    /// Componentwise minimum of all n + m exponents (zero polynomial: all zero).
    ExponentVector min_exponents() const {
        ExponentVector m(rank_ + coefficient_rank_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
                continue;
            }
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    void require_compatible(const LaurentPolynomial& b) const {
        if (rank_ != b.rank_ || coefficient_rank_ != b.coefficient_rank_) {
            throw dimension_error("Laurent polynomials over different rings");
        }
    }

private:
    friend LaurentPolynomial exact_div(const LaurentPolynomial&, const LaurentPolynomial&);

    std::size_t rank_ = 0;
    std::size_t coefficient_rank_ = 0;
    TermMap terms_;
};

/**
 * Exact quotient num / den in ZP[x^{+-1}].
 *
 * Both operands are shifted by monomials into Z[x, u] with no variable
 * dividing den, then leading terms are cancelled in the graded order. When
 * den divides num the quotient of the shifted operands is a polynomial,
 * so every step has a nonnegative exponent shift and an integer
 * coefficient ratio; anything else means num is not a multiple of den.
 */
inline LaurentPolynomial exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    num.require_compatible(den);
    if (den.is_zero()) throw argument_error("exact_div: division by zero");
    const std::size_t n = num.rank(), m = num.coefficient_rank(), width = n + m;
    LaurentPolynomial quotient(n, m);
    if (num.is_zero()) return quotient;

    const ExponentVector num_min = num.min_exponents();
    const ExponentVector den_min = den.min_exponents();
    auto shift_all = [&](const LaurentPolynomial& p, const ExponentVector& by) {
        LaurentPolynomial r(n, m);
        for (const auto& [key, c] : p.terms_) {
            ExponentVector e = key;
            for (std::size_t i = 0; i < width; ++i) e[i] -= by[i];
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    };
    LaurentPolynomial rem = shift_all(num, num_min);
    const LaurentPolynomial d = shift_all(den, den_min);
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();

    ExponentVector step(width), e(width);
    while (!rem.terms_.empty()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        for (std::size_t i = 0; i < width; ++i) {
            step[i] = re[i] - lead_e[i];
            if (step[i] < 0) throw not_laurent("exact_div: divisor does not divide dividend");
        }
        Integer rem_part;
        Integer c;
        divide_qr(rc, lead_c, c, rem_part);
        if (rem_part != 0) throw not_laurent("exact_div: leading coefficients do not divide");
        for (const auto& [de, dc] : d.terms_) {
            for (std::size_t i = 0; i < width; ++i) e[i] = de[i] + step[i];
            rem.add_term(e, -(c * dc));
        }
        quotient.add_term(step, c);
    }
    ExponentVector back(width);
    for (std::size_t i = 0; i < width; ++i) back[i] = den_min[i] - num_min[i];
    return shift_all(quotient, back);
}

inline DVector denominator_vector(const LaurentPolynomial& p) {
    if (p.is_zero()) throw argument_error("denominator_vector of the zero polynomial");
    DVector d(p.rank(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t j = 0; j < p.rank(); ++j) d[j] = first ? -e[j] : std::max(d[j], -e[j]);
        first = false;
    }
    return d;
}

/// Formal derivative with respect to x_i (0-based).
inline LaurentPolynomial partial_derivative(const LaurentPolynomial& p, std::size_t i) {
    if (i >= p.rank()) throw argument_error("partial_derivative: index out of range");
    LaurentPolynomial r(p.rank(), p.coefficient_rank());
    for (const auto& [key, c] : p.terms()) {
        const Exponent k = key[i];
        if (k == 0) continue;
        ExponentVector e = key;
        e[i] -= 1;
        r.add_term(std::move(e), c * k);
    }
    return r;
}

/// Exact value at x = x_point, u = semifield_point; all coordinates nonzero.
inline Rational evaluate(const LaurentPolynomial& p, std::span<const Rational> x_point,
                         std::span<const Rational> semifield_point) {
    if (x_point.size() != p.rank() || semifield_point.size() != p.coefficient_rank()) {
        throw dimension_error("evaluate: point has wrong dimensions");
    }
    for (const auto& v : x_point)
        if (v == 0) throw evaluation_error("evaluate: zero cluster coordinate");
    for (const auto& v : semifield_point)
        if (v == 0) throw evaluation_error("evaluate: zero semifield coordinate");
    const std::size_t n = p.rank();
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term(c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i]) term *= detail::rational_pow(x_point[i], e[i]);
        for (std::size_t j = 0; j < semifield_point.size(); ++j)
            if (e[n + j]) term *= detail::rational_pow(semifield_point[j], e[n + j]);
        total += term;
    }
    return total;
}

}  // namespace gca
