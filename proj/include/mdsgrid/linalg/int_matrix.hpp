#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"

namespace mdsgrid {

/// Dense row-major matrix over a scalar type (Integer or Rational).
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("ragged-matrix", "rows differ in length");
            for (long v : row) data_.emplace_back(v);
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T* row(std::size_t r) { return data_.data() + r * cols_; }
    const T* row(std::size_t r) const { return data_.data() + r * cols_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Columns [0, cols) followed by `extra` as one more column.
    DenseMatrix with_column(const std::vector<T>& extra) const {
        if (extra.size() != rows_) throw DomainError("shape-mismatch", "augmenting column has wrong length");
        DenseMatrix a(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) a(r, c) = (*this)(r, c);
            a(r, cols_) = extra[r];
        }
        return a;
    }

    DenseMatrix select_columns(const std::vector<std::size_t>& which) const {
        DenseMatrix s(rows_, which.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < which.size(); ++k) s(r, k) = (*this)(r, which[k]);
        return s;
    }

    DenseMatrix select_rows(const std::vector<std::size_t>& which) const {
        DenseMatrix s(which.size(), cols_);
        for (std::size_t k = 0; k < which.size(); ++k)
            for (std::size_t c = 0; c < cols_; ++c) s(k, c) = (*this)(which[k], c);
        return s;
    }

    DenseMatrix first_rows(std::size_t count) const {
        DenseMatrix s(count, cols_);
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < cols_; ++c) s(r, c) = (*this)(r, c);
        return s;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RatMatrix = DenseMatrix<Rational>;

/// y = x^T M  (left multiplication by a row vector).
template <typename T>
std::vector<T> left_multiply(const std::vector<T>& x, const DenseMatrix<T>& m) {
    if (x.size() != m.rows()) throw DomainError("shape-mismatch", "left_multiply: length mismatch");
    std::vector<T> y(m.cols(), T(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) y[c] += x[r] * m(r, c);
    }
    return y;
}

/// y = M x
template <typename T, typename V>
std::vector<V> right_multiply(const DenseMatrix<T>& m, const std::vector<V>& x) {
    if (x.size() != m.cols()) throw DomainError("shape-mismatch", "right_multiply: length mismatch");
    std::vector<V> y(m.rows(), V(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (x[c] != 0) y[r] += m(r, c) * x[c];
    return y;
}

}  // namespace mdsgrid
