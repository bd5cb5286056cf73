#include "matdiv/oracle.hpp"

#include <string>

namespace matdiv {

template <EuclideanDomain T>
std::optional<Matrix<T>> hnf_solve(const Matrix<T>& b, const Matrix<T>& a) {
    using R = RingTraits<T>;
    if (!b.is_square() || !a.is_square() || b.rows() != a.rows())
        throw DimensionMismatch("hnf_solve: need square matrices of equal size, got " + b.shape() + " and " +
                                a.shape());
    const auto hd = hermite_col(b);
    const std::size_t n = b.rows();

    // Solve H * Y = A by forward substitution down the pivot rows; rows
    // without a pivot must already be consistent.
    Matrix<T> y(n, a.cols());
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::vector<T> residual(n);
        for (std::size_t i = 0; i < n; ++i) residual[i] = a(i, col);
        std::size_t next = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (next < hd.rank && hd.pivot_rows[next] == i) {
                const T& pivot = hd.H(i, next);
                if (!R::divides(pivot, residual[i])) return std::nullopt;
                const T coeff = R::exact_div(residual[i], pivot);
                y(next, col) = coeff;
                if (!R::is_zero(coeff))
                    for (std::size_t r = i; r < n; ++r) residual[r] = residual[r] - coeff * hd.H(r, next);
                ++next;
            } else if (!R::is_zero(residual[i])) {
                return std::nullopt;
            }
        }
    }
    return hd.W * y;
}

template <EuclideanDomain T>
ColumnModule<T> column_module(const std::vector<Matrix<T>>& generators) {
    if (generators.empty()) return {};
    const std::size_t n = generators.front().rows();
    std::vector<std::vector<Matrix<T>>> row{{}};
    for (const auto& g : generators) {
        if (g.rows() != n)
            throw DimensionMismatch("column_module: generator with " + std::to_string(g.rows()) + " rows, expected " +
                                    std::to_string(n));
        row.front().push_back(g);
    }
    const auto hd = hermite_col(block_compose(row));
    return {block_extract(hd.H, 0, 0, n, hd.rank)};
}

std::vector<Matrix<Integer>> exhaustive_solutions(const Matrix<Integer>& b, const Matrix<Integer>& a, unsigned bound,
                                                  std::uint64_t ceiling) {
    if (!b.is_square() || !a.is_square() || b.rows() != a.rows())
        throw DimensionMismatch("exhaustive_solutions: need square matrices of equal size, got " + b.shape() +
                                " and " + a.shape());
    const std::size_t n = b.rows();
    const std::size_t cells = n * n;
    const std::uint64_t base = 2ull * bound + 1;
    std::uint64_t states = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        states *= base;
        if (states > ceiling)
            throw TooLarge("exhaustive_solutions: search space exceeds " + std::to_string(ceiling) + " states");
    }

    std::vector<Matrix<Integer>> found;
    std::vector<long> digits(cells, -static_cast<long>(bound));
    Matrix<Integer> x(n, n);
    for (std::uint64_t s = 0; s < states; ++s) {
        for (std::size_t c = 0; c < cells; ++c) x(c / n, c % n) = digits[c];
        if (b * x == a) found.push_back(x);
        // Odometer increment.
        for (std::size_t c = 0; c < cells; ++c) {
            if (digits[c] < static_cast<long>(bound)) {
                ++digits[c];
                break;
            }
            digits[c] = -static_cast<long>(bound);
        }
    }
    return found;
}

template std::optional<Matrix<Integer>> hnf_solve(const Matrix<Integer>&, const Matrix<Integer>&);
template std::optional<Matrix<PolyQ>> hnf_solve(const Matrix<PolyQ>&, const Matrix<PolyQ>&);
template ColumnModule<Integer> column_module(const std::vector<Matrix<Integer>>&);
template ColumnModule<PolyQ> column_module(const std::vector<Matrix<PolyQ>>&);

} // namespace matdiv
