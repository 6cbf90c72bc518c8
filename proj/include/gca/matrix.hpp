#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense row-major matrices over exact scalar types.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

/// a + b, throwing overflow_error instead of wrapping for built-in integers.
template <typename T>
T checked_add(const T& a, const T& b) {
    if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
        return r;
    } else {
        return a + b;
    }
}

/// a * b, throwing overflow_error instead of wrapping for built-in integers.
template <typename T>
T checked_mul(const T& a, const T& b) {
    if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
        return r;
    } else {
        return a * b;
    }
}

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw dimension_error("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    template <typename Range>
    static Matrix diagonal(const Range& values) {
        Matrix m(values.size(), values.size(), T(0));
        std::size_t i = 0;
        for (const auto& v : values) {
            m(i, i) = T(v);
            ++i;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<T>& values) {
        if (values.size() != rows_) throw dimension_error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entrywise conversion, e.g. integer to rational.
    template <typename U>
    Matrix<U> cast() const {
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = U((*this)(i, j));
        return r;
    }

    /// Simultaneous row/column relabeling: result(i, j) = this(perm[i], perm[j]).
    Matrix permuted(const std::vector<std::size_t>& perm) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(perm[i], perm[j]);
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix sum shape mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = checked_add(r.data_[i], b.data_[i]);
        return r;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix r = a;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    bool operator==(const Matrix&) const = default;

    bool is_skew_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& out, const Matrix& m) {
        out << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            out << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) out << (j ? ", " : "") << m(i, j);
            out << ']';
        }
        return out << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Exact determinant by fraction-preserving Gaussian elimination.
template <typename Field>
Field determinant(Matrix<Field> m) {
    if (!m.is_square()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Field det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == Field(0)) ++pivot;
        if (pivot == n) return Field(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == Field(0)) continue;
            Field f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; throws argument_error when singular.
template <typename Field>
Matrix<Field> inverse(Matrix<Field> m) {
    if (!m.is_square()) throw dimension_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<Field> inv = Matrix<Field>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == Field(0)) ++pivot;
        if (pivot == n) throw argument_error("singular matrix");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        }
        Field p = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == Field(0)) continue;
            Field f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace gca
