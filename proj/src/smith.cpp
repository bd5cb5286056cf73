#include "matdiv/smith.hpp"

#include <algorithm>

#include "elementary.hpp"

namespace matdiv {
namespace {

using detail::col_add;
using detail::col_mix;
using detail::col_scale;
using detail::row_add;
using detail::row_mix;
using detail::row_scale;

// Maintains work == P * A * Q together with Pinv and Qinv. Every step is a
// unimodular row or column update applied to the work matrix and the
// transform accumulators; with tracking off only the work matrix moves.
template <EuclideanDomain T>
class SmithEngine {
    using R = RingTraits<T>;

public:
    SmithEngine(const Matrix<T>& a, bool track)
        : work_(a), track_(track) {
        if (track_) {
            p_ = Matrix<T>::identity(a.rows());
            pinv_ = p_;
            q_ = Matrix<T>::identity(a.cols());
            qinv_ = q_;
        }
    }

    void run() {
        const std::size_t limit = std::min(work_.rows(), work_.cols());
        for (std::size_t s = 0; s < limit; ++s) {
            if (!move_pivot(s)) break;
            reduce_at(s);
            ++rank_;
        }
        // Fix associates last, in one place.
        for (std::size_t s = 0; s < rank_; ++s) {
            auto [canonical, unit] = R::normalize(work_(s, s));
            if (unit != R::one()) scale_row(s, R::unit_inverse(unit), unit);
            factors_.push_back(work_(s, s));
        }
    }

    SmithDecomposition<T> result() && {
        SmithDecomposition<T> sd;
        sd.P = std::move(p_);
        sd.Pinv = std::move(pinv_);
        sd.Q = std::move(q_);
        sd.Qinv = std::move(qinv_);
        sd.inv_factors = std::move(factors_);
        sd.rank = rank_;
        return sd;
    }

    std::vector<T> factors() && { return std::move(factors_); }

private:
    // Smallest entry of the trailing block by pivot_less, ties to the lowest
    // (row, col) in row-major order. Returns false if the block is zero.
    bool move_pivot(std::size_t s) {
        std::size_t pr = 0, pc = 0;
        bool found = false;
        for (std::size_t i = s; i < work_.rows(); ++i) {
            for (std::size_t j = s; j < work_.cols(); ++j) {
                const T& x = work_(i, j);
                if (R::is_zero(x)) continue;
                if (!found || R::pivot_less(x, work_(pr, pc))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        }
        if (!found) return false;
        swap_rows(s, pr);
        swap_cols(s, pc);
        return true;
    }

    // Clears row s and column s outside the pivot, then enforces that the
    // pivot divides the whole trailing block. Each non-trivial Bezout step
    // replaces the pivot by a proper divisor, so the loop terminates.
    void reduce_at(std::size_t s) {
        while (true) {
            for (std::size_t i = s + 1; i < work_.rows(); ++i) clear_below(s, i);
            for (std::size_t j = s + 1; j < work_.cols(); ++j) clear_right(s, j);

            bool column_clean = true;
            for (std::size_t i = s + 1; i < work_.rows(); ++i)
                if (!R::is_zero(work_(i, s))) column_clean = false;
            if (!column_clean) continue;

            std::optional<std::size_t> offending;
            for (std::size_t i = s + 1; i < work_.rows() && !offending; ++i)
                for (std::size_t j = s + 1; j < work_.cols(); ++j)
                    if (!R::divides(work_(s, s), work_(i, j))) {
                        offending = i;
                        break;
                    }
            if (!offending) return;
            add_row(s, *offending, R::one());
        }
    }

    void clear_below(std::size_t s, std::size_t i) {
        const T a = work_(s, s);
        const T b = work_(i, s);
        if (R::is_zero(b)) return;
        if (R::divides(a, b)) {
            add_row(i, s, T(-R::exact_div(b, a)));
            return;
        }
        auto [g, u, v] = R::ext_gcd(a, b);
        mix_rows(s, i, u, v, T(-R::exact_div(b, g)), R::exact_div(a, g));
    }

    void clear_right(std::size_t s, std::size_t j) {
        const T a = work_(s, s);
        const T b = work_(s, j);
        if (R::is_zero(b)) return;
        if (R::divides(a, b)) {
            add_col(j, s, T(-R::exact_div(b, a)));
            return;
        }
        auto [g, u, v] = R::ext_gcd(a, b);
        mix_cols(s, j, u, T(-R::exact_div(b, g)), v, R::exact_div(a, g));
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        work_.swap_rows(i, j);
        if (!track_) return;
        p_.swap_rows(i, j);
        pinv_.swap_cols(i, j);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        work_.swap_cols(i, j);
        if (!track_) return;
        q_.swap_cols(i, j);
        qinv_.swap_rows(i, j);
    }

    void add_row(std::size_t dst, std::size_t src, const T& q) {
        row_add(work_, dst, src, q);
        if (!track_) return;
        row_add(p_, dst, src, q);
        col_add(pinv_, src, dst, T(-q));
    }

    void add_col(std::size_t dst, std::size_t src, const T& q) {
        col_add(work_, dst, src, q);
        if (!track_) return;
        col_add(q_, dst, src, q);
        row_add(qinv_, src, dst, T(-q));
    }

    // Rows (i, j) <- [[a, b], [c, d]] * rows (i, j), with ad - bc == 1.
    void mix_rows(std::size_t i, std::size_t j, const T& a, const T& b, const T& c, const T& d) {
        row_mix(work_, i, j, a, b, c, d);
        if (!track_) return;
        row_mix(p_, i, j, a, b, c, d);
        col_mix(pinv_, i, j, d, T(-b), T(-c), a);
    }

    // Columns (i, j) <- columns (i, j) * [[a, b], [c, d]], with ad - bc == 1.
    void mix_cols(std::size_t i, std::size_t j, const T& a, const T& b, const T& c, const T& d) {
        col_mix(work_, i, j, a, b, c, d);
        if (!track_) return;
        col_mix(q_, i, j, a, b, c, d);
        row_mix(qinv_, i, j, d, T(-b), T(-c), a);
    }

    void scale_row(std::size_t i, const T& unit, const T& inverse) {
        row_scale(work_, i, unit);
        if (!track_) return;
        row_scale(p_, i, unit);
        col_scale(pinv_, i, inverse);
    }

    Matrix<T> work_;
    bool track_;
    Matrix<T> p_, pinv_, q_, qinv_;
    std::vector<T> factors_;
    std::size_t rank_ = 0;
};

template <EuclideanDomain T>
SmithObserver<T>& observer() {
    static SmithObserver<T> instance;
    return instance;
}

} // namespace

template <EuclideanDomain T>
SmithDecomposition<T> smith(const Matrix<T>& a) {
    SmithEngine<T> engine(a, true);
    engine.run();
    auto sd = std::move(engine).result();
    if (const auto& watch = observer<T>()) watch(a, sd);
    return sd;
}

template <EuclideanDomain T>
void set_smith_observer(SmithObserver<T> watch) {
    observer<T>() = std::move(watch);
}

template <EuclideanDomain T>
std::vector<T> invariant_factors(const Matrix<T>& a) {
    SmithEngine<T> engine(a, false);
    engine.run();
    return std::move(engine).factors();
}

template <EuclideanDomain T>
std::optional<std::string> smith_violation(const Matrix<T>& a, const SmithDecomposition<T>& sd) {
    using R = RingTraits<T>;
    if (sd.P.rows() != a.rows() || sd.Q.rows() != a.cols()) return "transform shapes do not match " + a.shape();
    if (sd.rank != sd.inv_factors.size()) return "rank differs from the number of invariant factors";
    if (sd.P * a * sd.Q != sd.E()) return "P*A*Q != E";
    if (sd.P * sd.Pinv != Matrix<T>::identity(a.rows())) return "P*Pinv != I";
    if (sd.Q * sd.Qinv != Matrix<T>::identity(a.cols())) return "Q*Qinv != I";
    for (std::size_t i = 0; i < sd.inv_factors.size(); ++i) {
        const T& f = sd.inv_factors[i];
        if (R::is_zero(f)) return "invariant factor " + std::to_string(i + 1) + " is zero";
        if (R::normalize(f).first != f) return "invariant factor " + std::to_string(i + 1) + " is not canonical";
        if (i + 1 < sd.inv_factors.size() && !R::divides(f, sd.inv_factors[i + 1]))
            return "invariant factor " + std::to_string(i + 1) + " does not divide the next";
    }
    return std::nullopt;
}

template SmithDecomposition<Integer> smith(const Matrix<Integer>&);
template SmithDecomposition<PolyQ> smith(const Matrix<PolyQ>&);
template std::vector<Integer> invariant_factors(const Matrix<Integer>&);
template std::vector<PolyQ> invariant_factors(const Matrix<PolyQ>&);
template std::optional<std::string> smith_violation(const Matrix<Integer>&, const SmithDecomposition<Integer>&);
template std::optional<std::string> smith_violation(const Matrix<PolyQ>&, const SmithDecomposition<PolyQ>&);
template void set_smith_observer(SmithObserver<Integer>);
template void set_smith_observer(SmithObserver<PolyQ>);

} // namespace matdiv
