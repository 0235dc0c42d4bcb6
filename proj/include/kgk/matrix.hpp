#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kgk/integer.hpp"

namespace kgk {

/// Dense row-major matrix over an exact integer type. Empty shapes (0 x n,
/// n x 0) are legal and stand for zero maps between the obvious modules.
template <typename T>
class basic_matrix {
public:
    using value_type = T;

    basic_matrix() = default;

    basic_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    basic_matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix: entry count does not match shape");
    }

    basic_matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("matrix: ragged initializer");
            for (const auto& x : r) data_.push_back(x);
        }
    }

    static basic_matrix identity(std::size_t n) {
        basic_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static basic_matrix zero(std::size_t rows, std::size_t cols) {
        return basic_matrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return data_; }

    bool operator==(const basic_matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const basic_matrix& other) const { return !(*this == other); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    basic_matrix transpose() const {
        basic_matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    basic_matrix operator-() const {
        basic_matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    basic_matrix operator+(const basic_matrix& other) const {
        require_same_shape(other);
        basic_matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
        return r;
    }

    basic_matrix operator-(const basic_matrix& other) const {
        require_same_shape(other);
        basic_matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
        return r;
    }

    basic_matrix operator*(const basic_matrix& other) const {
        if (cols_ != other.rows_)
            throw std::invalid_argument("matrix: product shape mismatch");
        basic_matrix r(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    r(i, j) += a * other(k, j);
            }
        return r;
    }

    /// Writes `block` with top-left corner at (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const basic_matrix& block) {
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                (*this)(i0 + i, j0 + j) = block(i, j);
    }

    basic_matrix block(std::size_t i0, std::size_t j0, std::size_t rows,
                       std::size_t cols) const {
        basic_matrix b(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

private:
    void require_same_shape(const basic_matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using imat = basic_matrix<bigint>;

template <typename T>
basic_matrix<T> hstack(const std::vector<basic_matrix<T>>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    basic_matrix<T> r(rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        r.set_block(0, at, b);
        at += b.cols();
    }
    return r;
}

template <typename T>
basic_matrix<T> vstack(const std::vector<basic_matrix<T>>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks.front().cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    basic_matrix<T> r(rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        r.set_block(at, 0, b);
        at += b.rows();
    }
    return r;
}

template <typename T>
basic_matrix<T> kronecker(const basic_matrix<T>& a, const basic_matrix<T>& b) {
    basic_matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename T>
T determinant(const basic_matrix<T>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    basic_matrix<T> a = m;
    T sign(1), prev(1);
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a(t, t) == 0) {
            std::size_t p = t + 1;
            while (p < n && a(p, t) == 0) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(t, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(t, t) - a(i, t) * a(t, j)) / prev;
        prev = a(t, t);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace kgk
