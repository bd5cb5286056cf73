#pragma once

// Shared fixtures for the unit and acceptance suites: the worked 7x7
// integer instance, seeded random generators, and a determinantal-divisor
// oracle for invariant factors that never touches the Smith engine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "matdiv/domains.hpp"
#include "matdiv/matrix.hpp"

namespace matdiv::testing {

using IMat = Matrix<Integer>;
using PMat = Matrix<PolyQ>;

inline IMat worked_A() {
    return IMat::diagonal({1, 2, 6, 0, 0, 0, 0}, 7, 7);
}

inline IMat worked_B() {
    return {{0, 1, 0, 0, 0, 0, 0},    {0, -2, 2, 0, 0, 0, 0},  {1, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0},    {-2, 0, -12, 0, 12, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
            {-2, 0, -4, 4, 0, 0, 0}};
}

/// Reference row transform V = L for B (the reference decomposition of A has P = Q = I).
inline IMat worked_L() {
    return {{0, 0, 1, 0, 0, 0, 0},  {1, 0, 0, 0, 0, 0, 0}, {2, 1, 0, 0, 0, 0, 0}, {4, 2, 2, 0, 0, 0, 1},
            {12, 6, 2, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0}};
}

/// Top-left 5x3 block [M1; M2] of the reference S.
inline IMat worked_core() {
    return {{0, 0, 6}, {1, 0, 0}, {1, 1, 0}, {1, 1, 3}, {1, 1, 1}};
}

inline IMat worked_F() {
    IMat f(7, 7);
    const IMat core = worked_core();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 3; ++j) f(i, j) = core(i, j);
    f(5, 5) = 1;
    f(6, 6) = 1;
    return f;
}

inline IMat worked_N() {
    IMat f = worked_F();
    f(5, 5) = 0;
    f(6, 6) = 0;
    return f;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IMat random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
    return m;
}

/// Random polynomial of degree <= max_degree; coefficients are small
/// integers, occasionally halves.
inline PolyQ random_poly(Rng& rng, int max_degree, long coeff = 3) {
    std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
    for (auto& x : c) {
        x = Rational(uniform(rng, -coeff, coeff), uniform(rng, 0, 4) == 0 ? 2 : 1);
        x.canonicalize();
    }
    return PolyQ(std::move(c));
}

inline PMat random_poly_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_degree, long coeff = 3) {
    PMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, max_degree, coeff);
    return m;
}

template <class T>
T random_scalar(Rng& rng, long bound);

template <>
inline Integer random_scalar<Integer>(Rng& rng, long bound) {
    return Integer(uniform(rng, -bound, bound));
}

template <>
inline PolyQ random_scalar<PolyQ>(Rng& rng, long bound) {
    return random_poly(rng, 1, bound);
}

template <class T>
Matrix<T> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<T>(rng, bound);
    return m;
}

/// Product of random elementary row operations: unimodular by construction.
template <class T>
Matrix<T> random_unimodular(Rng& rng, std::size_t n, int steps = 8, long bound = 2) {
    Matrix<T> m = Matrix<T>::identity(n);
    if (n < 2) {
        if (n == 1 && uniform(rng, 0, 1)) m(0, 0) = -m(0, 0);
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const T q = random_scalar<T>(rng, bound);
        for (std::size_t c = 0; c < n; ++c) m(i, c) = m(i, c) + q * m(j, c);
        if (uniform(rng, 0, 3) == 0) m.swap_rows(i, j);
    }
    return m;
}

/// Makes some rows of a square matrix copies, negations or zeros of others,
/// so the matrix is rank deficient while its entries stay in range.
template <class T>
Matrix<T> degrade_rank(Rng& rng, Matrix<T> m) {
    const long n = static_cast<long>(m.rows());
    if (n < 2) return m;
    const long victims = uniform(rng, 1, n - 1);
    for (long v = 0; v < victims; ++v) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, n - 1));
        const auto j = static_cast<std::size_t>(uniform(rng, 0, n - 1));
        const long mode = uniform(rng, 0, 2);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (mode == 0) m(i, c) = RingTraits<T>::zero();
            else if (mode == 1) m(i, c) = m(j, c);
            else m(i, c) = -m(j, c);
        }
    }
    return m;
}

/// gcd of all k x k minors for k = 1..rank, via explicit enumeration.
/// Invariant factors follow as d_k / d_{k-1}.
template <class T>
std::vector<T> determinantal_divisors(const Matrix<T>& m) {
    using R = RingTraits<T>;
    std::vector<T> out;
    const std::size_t limit = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= limit; ++k) {
        T g = R::zero();
        std::vector<std::size_t> rsel(k), csel(k);
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t from) {
            if (depth == k) {
                pick_cols(0, 0);
                return;
            }
            for (std::size_t r = from; r < m.rows(); ++r) {
                rsel[depth] = r;
                pick_rows(depth + 1, r + 1);
            }
        };
        pick_cols = [&](std::size_t depth, std::size_t from) {
            if (depth == k) {
                Matrix<T> sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
                g = R::ext_gcd(g, determinant(sub)).g;
                return;
            }
            for (std::size_t c = from; c < m.cols(); ++c) {
                csel[depth] = c;
                pick_cols(depth + 1, c + 1);
            }
        };
        pick_rows(0, 0);
        if (R::is_zero(g)) break;
        out.push_back(g);
    }
    return out;
}

template <class T>
std::vector<T> invariant_factors_by_minors(const Matrix<T>& m) {
    const auto d = determinantal_divisors(m);
    std::vector<T> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out.push_back(i == 0 ? d[0] : RingTraits<T>::exact_div(d[i], d[i - 1]));
    return out;
}

} // namespace matdiv::testing
