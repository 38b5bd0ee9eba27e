#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cbkit/fields.hpp"

namespace cbkit {

/// Dense matrix over an exact field. Row-major, immutable size.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, K fill = K{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(at(a, c), at(b, c));
    }

    std::vector<K> row(std::size_t r) const {
        return std::vector<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

/// Rank by plain Gaussian elimination; the workhorse over F_p.
template <class K>
std::size_t rank(Matrix<K> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        const K inv = inverse(m.at(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m.at(i, c))) continue;
            const K f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

/// Fraction-free (Bareiss) elimination over the integers: every division is
/// exact, and entry growth is bounded by minors of the input.
inline std::size_t bareiss_rank(Matrix<Integer> m) {
    std::size_t r = 0;
    Integer prev(1);
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        const Integer pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Clear denominators row by row (row scaling preserves rank) so the rational
/// rank runs fraction-free on integers.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale(1);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Integer den = boost::multiprecision::denominator(m.at(r, c));
            scale = boost::multiprecision::lcm(scale, den);
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational v = m.at(r, c) * Rational(scale);
            out.at(r, c) = boost::multiprecision::numerator(v);
        }
    }
    return out;
}

inline std::size_t rank(const Matrix<Rational>& m) {
    return bareiss_rank(clear_denominators(m));
}

template <class K>
struct Rref {
    Matrix<K> mat;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with recorded pivot columns. Pivots are the
/// first usable row per column, so the result is deterministic.
template <class K>
Rref<K> reduced_row_echelon(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        const K inv = inverse(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            const K f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Canonical kernel basis from the RREF: one vector per free column, in
/// column order, with that free coordinate set to one and the other free
/// coordinates zero.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m, const K& one) {
    const auto rref = reduced_row_echelon(m);
    const auto& pivots = rref.pivot_cols;
    std::vector<std::vector<K>> basis;
    const K zero = one - one;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        std::vector<K> v(m.cols(), zero);
        v[c] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = zero - rref.mat.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cbkit
