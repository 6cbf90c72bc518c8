#pragma once

/**
 * @file semifield.hpp
 * @brief Tropical semifields Trop(u_1..u_m) and their integer group rings ZP.
 *
 * A SemifieldElement is a Laurent monomial u^a stored as its exponent
 * vector. Multiplication adds exponents, auxiliary addition takes the
 * componentwise minimum. GroupRingElement is a finite Z-linear
 * combination of such monomials and is the coefficient ring of every
 * Laurent polynomial in the library.
 */

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gca/errors.hpp"

namespace gca {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

namespace detail {

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_';
    });
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline Exponent parse_exponent(std::string_view text, std::string_view context) {
    text = trim(text);
    Exponent value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw argument_error("bad exponent '" + std::string(text) + "' in '" + std::string(context) + "'");
    }
    return value;
}

/// Writes `name` or `name^e`, omitting factors with exponent 0.
inline void write_power(std::ostream& out, std::string_view name, Exponent e, bool& first) {
    if (e == 0) return;
    if (!first) out << '*';
    first = false;
    out << name;
    if (e != 1) out << '^' << e;
}

}  // namespace detail

/// A Laurent monomial in the generators of a tropical semifield.
class SemifieldElement {
public:
    SemifieldElement() = default;
    explicit SemifieldElement(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

    static SemifieldElement identity(std::size_t rank) { return SemifieldElement(std::vector<Exponent>(rank, 0)); }

    static SemifieldElement generator(std::size_t rank, std::size_t index) {
        if (index >= rank) throw argument_error("generator index out of range");
        std::vector<Exponent> e(rank, 0);
        e[index] = 1;
        return SemifieldElement(std::move(e));
    }

    std::size_t rank() const noexcept { return exponents_.size(); }
    std::span<const Exponent> exponents() const noexcept { return exponents_; }
    Exponent operator[](std::size_t i) const { return exponents_.at(i); }

    bool is_identity() const noexcept {
        return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
    }

    SemifieldElement inverse() const {
        auto e = exponents_;
        for (auto& v : e) v = -v;
        return SemifieldElement(std::move(e));
    }

    SemifieldElement pow(Exponent k) const {
        auto e = exponents_;
        for (auto& v : e) v *= k;
        return SemifieldElement(std::move(e));
    }

    friend SemifieldElement operator*(const SemifieldElement& a, const SemifieldElement& b) {
        a.require_same_rank(b);
        auto e = a.exponents_;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents_[i];
        return SemifieldElement(std::move(e));
    }

    friend SemifieldElement operator/(const SemifieldElement& a, const SemifieldElement& b) { return a * b.inverse(); }

    /// Auxiliary (tropical) addition: componentwise minimum of exponents.
    friend SemifieldElement operator|(const SemifieldElement& a, const SemifieldElement& b) {
        a.require_same_rank(b);
        auto e = a.exponents_;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents_[i]);
        return SemifieldElement(std::move(e));
    }

    auto operator<=>(const SemifieldElement&) const = default;
    bool operator==(const SemifieldElement&) const = default;

    void require_same_rank(const SemifieldElement& other) const {
        if (rank() != other.rank()) {
            throw dimension_error("semifield elements over " + std::to_string(rank()) + " and " +
                                  std::to_string(other.rank()) + " generators");
        }
    }

private:
    std::vector<Exponent> exponents_;
};

inline SemifieldElement trop_mul(const SemifieldElement& a, const SemifieldElement& b) { return a * b; }
inline SemifieldElement trop_add(const SemifieldElement& a, const SemifieldElement& b) { return a | b; }

/// c_0 (+) c_1 u (+) ... (+) c_r u^r inside the tropical semifield.
inline SemifieldElement eval_poly_tropical(std::span<const SemifieldElement> coeffs, const SemifieldElement& arg) {
    if (coeffs.empty()) throw argument_error("eval_poly_tropical: empty coefficient list");
    SemifieldElement acc = coeffs[0];
    SemifieldElement power = SemifieldElement::identity(arg.rank());
    for (std::size_t s = 1; s < coeffs.size(); ++s) {
        power = power * arg;
        acc = acc | (coeffs[s] * power);
    }
    return acc;
}

/// Ordered generator names of Trop(u_1..u_m).
class TropicalSemifield {
public:
    TropicalSemifield() = default;

    explicit TropicalSemifield(std::vector<std::string> generators) : generators_(std::move(generators)) {
        std::set<std::string_view> seen;
        for (const auto& name : generators_) {
            if (!detail::is_identifier(name)) {
                throw argument_error("invalid generator name '" + name + "'");
            }
            if (!seen.insert(name).second) throw argument_error("duplicate generator name '" + name + "'");
        }
    }

    std::size_t rank() const noexcept { return generators_.size(); }
    const std::vector<std::string>& generators() const noexcept { return generators_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = std::find(generators_.begin(), generators_.end(), name);
        if (it == generators_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - generators_.begin());
    }

    SemifieldElement one() const { return SemifieldElement::identity(rank()); }
    SemifieldElement generator(std::size_t i) const { return SemifieldElement::generator(rank(), i); }

    /// Parses "1" or a product like "y1^2*z1_1^-1".
    SemifieldElement parse(std::string_view text) const {
        std::vector<Exponent> e(rank(), 0);
        auto body = detail::trim(text);
        if (body == "1") return SemifieldElement(std::move(e));
        if (body.empty()) throw argument_error("empty monomial");
        std::size_t start = 0;
        while (start <= body.size()) {
            auto stop = body.find('*', start);
            auto factor = detail::trim(body.substr(start, stop == std::string_view::npos ? body.npos : stop - start));
            auto caret = factor.find('^');
            auto name = detail::trim(factor.substr(0, caret));
            Exponent power = caret == std::string_view::npos ? 1 : detail::parse_exponent(factor.substr(caret + 1), text);
            auto idx = index_of(name);
            if (!idx) throw argument_error("unknown generator '" + std::string(name) + "' in '" + std::string(text) + "'");
            e[*idx] += power;
            if (stop == std::string_view::npos) break;
            start = stop + 1;
        }
        return SemifieldElement(std::move(e));
    }

    std::string render(const SemifieldElement& a) const {
        if (a.rank() != rank()) throw dimension_error("render: element rank does not match semifield");
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < rank(); ++i) detail::write_power(out, generators_[i], a[i], first);
        if (first) return "1";
        return out.str();
    }

    bool operator==(const TropicalSemifield&) const = default;

private:
    std::vector<std::string> generators_;
};

/// Element of the group ring ZP: sparse map monomial -> nonzero integer.
class GroupRingElement {
public:
    using TermMap = std::map<SemifieldElement, Integer>;

    explicit GroupRingElement(std::size_t rank = 0) : rank_(rank) {}
    GroupRingElement(std::size_t rank, const Integer& constant) : rank_(rank) {
        if (constant != 0) terms_.emplace(SemifieldElement::identity(rank), constant);
    }

    static GroupRingElement monomial(const SemifieldElement& m, const Integer& c = 1) {
        GroupRingElement r(m.rank());
        if (c != 0) r.terms_.emplace(m, c);
        return r;
    }

    std::size_t rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    void add_term(const SemifieldElement& m, const Integer& c) {
        if (m.rank() != rank_) throw dimension_error("group ring term has wrong rank");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& b) {
        require_same_rank(b);
        for (const auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }

    GroupRingElement& operator-=(const GroupRingElement& b) {
        require_same_rank(b);
        for (const auto& [m, c] : b.terms_) add_term(m, -c);
        return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }

    friend GroupRingElement operator-(GroupRingElement a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        a.require_same_rank(b);
        GroupRingElement r(a.rank_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    /// Multiplication by an invertible monomial of ZP.
    GroupRingElement shifted(const SemifieldElement& m) const {
        GroupRingElement r(rank_);
        for (const auto& [t, c] : terms_) r.terms_.emplace(t * m, c);
        return r;
    }

    bool operator==(const GroupRingElement&) const = default;

    /// Signed sum in ascending lexicographic order of exponent vectors.
    std::string to_string(const TropicalSemifield& field) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first_term = true;
        for (const auto& [m, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first_term) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first_term = false;
            std::string mono = field.render(m);
            if (mono == "1") {
                out << mag;
            } else if (mag == 1) {
                out << mono;
            } else {
                out << mag << '*' << mono;
            }
        }
        return out.str();
    }

private:
    void require_same_rank(const GroupRingElement& other) const {
        if (rank_ != other.rank_) throw dimension_error("group ring elements over different semifields");
    }

    std::size_t rank_ = 0;
    TermMap terms_;
};

}  // namespace gca
