#include "matdiv/hermite.hpp"

#include "elementary.hpp"

namespace matdiv {

template <EuclideanDomain T>
HermiteDecomposition<T> hermite_col(const Matrix<T>& a) {
    using R = RingTraits<T>;
    using detail::col_add;
    using detail::col_mix;
    using detail::col_scale;

    Matrix<T> h = a;
    Matrix<T> w = Matrix<T>::identity(a.cols());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;

    auto add = [&](std::size_t dst, std::size_t src, const T& q) {
        col_add(h, dst, src, q);
        col_add(w, dst, src, q);
    };

    for (std::size_t i = 0; i < h.rows() && r < h.cols(); ++i) {
        // Collect the gcd of row i, columns r.., into column r.
        for (std::size_t j = r + 1; j < h.cols(); ++j) {
            const T b = h(i, j);
            if (R::is_zero(b)) continue;
            const T x = h(i, r);
            if (R::is_zero(x)) {
                h.swap_cols(r, j);
                w.swap_cols(r, j);
            } else if (R::divides(x, b)) {
                add(j, r, T(-R::exact_div(b, x)));
            } else {
                auto [g, u, v] = R::ext_gcd(x, b);
                const T nb = -R::exact_div(b, g);
                const T xa = R::exact_div(x, g);
                col_mix(h, r, j, u, nb, v, xa);
                col_mix(w, r, j, u, nb, v, xa);
            }
        }
        if (R::is_zero(h(i, r))) continue;

        auto [canonical, unit] = R::normalize(h(i, r));
        if (unit != R::one()) {
            const T inv = R::unit_inverse(unit);
            col_scale(h, r, inv);
            col_scale(w, r, inv);
        }
        for (std::size_t j = 0; j < r; ++j) {
            auto [q, rem] = R::div_rem(h(i, j), h(i, r));
            if (!R::is_zero(q)) add(j, r, T(-q));
        }
        pivots.push_back(i);
        ++r;
    }
    return {std::move(h), std::move(w), r, std::move(pivots)};
}

template HermiteDecomposition<Integer> hermite_col(const Matrix<Integer>&);
template HermiteDecomposition<PolyQ> hermite_col(const Matrix<PolyQ>&);

} // namespace matdiv
