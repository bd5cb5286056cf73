#pragma once

// In-place elementary operations shared by the normal-form engines.

#include <cstddef>
#include <type_traits>

#include "matdiv/matrix.hpp"

namespace matdiv::detail {

template <class T>
using Scalar = std::type_identity_t<T>;

/// row[dst] += q * row[src]
template <EuclideanDomain T>
void row_add(Matrix<T>& m, std::size_t dst, std::size_t src, const Scalar<T>& q) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!RingTraits<T>::is_zero(m(src, j))) m(dst, j) = m(dst, j) + q * m(src, j);
}

/// col[dst] += q * col[src]
template <EuclideanDomain T>
void col_add(Matrix<T>& m, std::size_t dst, std::size_t src, const Scalar<T>& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!RingTraits<T>::is_zero(m(i, src))) m(i, dst) = m(i, dst) + q * m(i, src);
}

/// Left-multiplies rows (i, j) by [[a, b], [c, d]].
template <EuclideanDomain T>
void row_mix(Matrix<T>& m, std::size_t i, std::size_t j, const Scalar<T>& a, const Scalar<T>& b,
             const Scalar<T>& c, const Scalar<T>& d) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        T x = m(i, k), y = m(j, k);
        m(i, k) = a * x + b * y;
        m(j, k) = c * x + d * y;
    }
}

/// Right-multiplies columns (i, j) by [[a, b], [c, d]].
template <EuclideanDomain T>
void col_mix(Matrix<T>& m, std::size_t i, std::size_t j, const Scalar<T>& a, const Scalar<T>& b,
             const Scalar<T>& c, const Scalar<T>& d) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        T x = m(k, i), y = m(k, j);
        m(k, i) = a * x + c * y;
        m(k, j) = b * x + d * y;
    }
}

template <EuclideanDomain T>
void row_scale(Matrix<T>& m, std::size_t i, const Scalar<T>& s) {
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = s * m(i, k);
}

template <EuclideanDomain T>
void col_scale(Matrix<T>& m, std::size_t j, const Scalar<T>& s) {
    for (std::size_t k = 0; k < m.rows(); ++k) m(k, j) = s * m(k, j);
}

} // namespace matdiv::detail
