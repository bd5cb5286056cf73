#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "matdiv/errors.hpp"
#include "matdiv/ring.hpp"

namespace matdiv {

/// Dense row-major matrix over an exact domain. Zero-sized dimensions are
/// allowed everywhere; they appear naturally when a rank is 0 or full.
template <EuclideanDomain T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, RingTraits<T>::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("Matrix: " + std::to_string(data_.size()) + " entries for a " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one();
        return m;
    }

    /// rows x cols matrix with `diag` on the leading diagonal.
    static Matrix diagonal(const std::vector<T>& diag, std::size_t rows, std::size_t cols) {
        if (diag.size() > std::min(rows, cols)) throw DimensionMismatch("diagonal: too many entries");
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& entries() const noexcept { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return RingTraits<T>::is_zero(x); });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix& operator+=(const Matrix& rhs) {
        require_same_shape(rhs, "operator+");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] + rhs.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& rhs) {
        require_same_shape(rhs, "operator-");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] - rhs.data_[i];
        return *this;
    }

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

    friend Matrix operator-(Matrix m) {
        for (auto& x : m.data_) x = -x;
        return m;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.data_) x = s * x;
        return m;
    }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.cols_ != rhs.rows_)
            throw DimensionMismatch("multiply: " + lhs.shape() + " times " + rhs.shape());
        Matrix out(lhs.rows_, rhs.cols_);
        for (std::size_t i = 0; i < lhs.rows_; ++i) {
            for (std::size_t k = 0; k < lhs.cols_; ++k) {
                const T& a = lhs(i, k);
                if (RingTraits<T>::is_zero(a)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = out(i, j) + a * rhs(k, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& rhs, const char* op) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw DimensionMismatch(std::string(op) + ": " + shape() + " vs " + rhs.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <EuclideanDomain T>
Matrix<T> multiply(const Matrix<T>& lhs, const Matrix<T>& rhs) {
    return lhs * rhs;
}

/// Assembles a grid of blocks. Every block in a grid row must have the same
/// row count and every block in a grid column the same column count.
template <EuclideanDomain T>
Matrix<T> block_compose(const std::vector<std::vector<Matrix<T>>>& grid) {
    if (grid.empty()) return Matrix<T>();
    const std::size_t grid_cols = grid.front().size();
    std::vector<std::size_t> heights, widths(grid_cols);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (grid[gi].size() != grid_cols) throw DimensionMismatch("block_compose: ragged block grid");
        heights.push_back(grid[gi].empty() ? 0 : grid[gi].front().rows());
        for (std::size_t gj = 0; gj < grid_cols; ++gj) {
            const auto& b = grid[gi][gj];
            if (b.rows() != heights[gi])
                throw DimensionMismatch("block_compose: block (" + std::to_string(gi) + "," + std::to_string(gj) +
                                        ") has " + std::to_string(b.rows()) + " rows, expected " +
                                        std::to_string(heights[gi]));
            if (gi == 0) {
                widths[gj] = b.cols();
            } else if (b.cols() != widths[gj]) {
                throw DimensionMismatch("block_compose: block (" + std::to_string(gi) + "," + std::to_string(gj) +
                                        ") has " + std::to_string(b.cols()) + " cols, expected " +
                                        std::to_string(widths[gj]));
            }
        }
    }
    std::size_t rows = 0, cols = 0;
    for (auto h : heights) rows += h;
    for (auto w : widths) cols += w;
    Matrix<T> out(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        std::size_t c0 = 0;
        for (std::size_t gj = 0; gj < grid_cols; ++gj) {
            const auto& b = grid[gi][gj];
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
            c0 += widths[gj];
        }
        r0 += heights[gi];
    }
    return out;
}

template <EuclideanDomain T>
Matrix<T> block_extract(const Matrix<T>& m, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) {
    if (row + rows > m.rows() || col + cols > m.cols())
        throw DimensionMismatch("block_extract: " + std::to_string(rows) + "x" + std::to_string(cols) + " at (" +
                                std::to_string(row) + "," + std::to_string(col) + ") exceeds " + m.shape());
    Matrix<T> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(row + i, col + j);
    return out;
}

/// [lhs rhs].
template <EuclideanDomain T>
Matrix<T> hconcat(const Matrix<T>& lhs, const Matrix<T>& rhs) {
    return block_compose<T>({{lhs, rhs}});
}

/// Exact determinant. Cofactor expansion up to 3x3, fraction-free
/// (Bareiss) elimination above; every division in Bareiss is exact.
template <EuclideanDomain T>
T determinant(const Matrix<T>& m) {
    using R = RingTraits<T>;
    if (!m.is_square()) throw DimensionMismatch("determinant: " + m.shape() + " is not square");
    const std::size_t n = m.rows();
    switch (n) {
    case 0:
        return R::one();
    case 1:
        return m(0, 0);
    case 2:
        return T(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    case 3:
        return T(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                 m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                 m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
    default:
        break;
    }
    Matrix<T> a = m;
    bool negate = false;
    T prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (R::is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && R::is_zero(a(p, k))) ++p;
            if (p == n) return R::zero();
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = R::exact_div(num, prev);
            }
            a(i, k) = R::zero();
        }
        prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return negate ? T(-det) : det;
}

template <EuclideanDomain T>
bool is_unimodular(const Matrix<T>& m) {
    return RingTraits<T>::is_unit(determinant(m));
}

} // namespace matdiv
