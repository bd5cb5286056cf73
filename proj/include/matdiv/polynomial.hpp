#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "matdiv/ring.hpp"

namespace matdiv {

using Rational = mpq_class;

/// Univariate polynomial over Q, stored as ascending coefficients with no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long constant);
    PolyQ(const Rational& constant);
    explicit PolyQ(std::vector<Rational> coefficients);
    PolyQ(std::initializer_list<Rational> coefficients);

    /// x^power.
    static PolyQ monomial(unsigned power, const Rational& coefficient = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Coefficient of x^i; zero past the degree.
    Rational coefficient(std::size_t i) const;
    const Rational& leading() const { return coeffs_.back(); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    PolyQ& operator+=(const PolyQ& rhs);
    PolyQ& operator-=(const PolyQ& rhs);
    PolyQ& operator*=(const PolyQ& rhs);
    PolyQ& operator*=(const Rational& rhs);

    friend PolyQ operator+(PolyQ lhs, const PolyQ& rhs) { return lhs += rhs; }
    friend PolyQ operator-(PolyQ lhs, const PolyQ& rhs) { return lhs -= rhs; }
    friend PolyQ operator*(const PolyQ& lhs, const PolyQ& rhs);
    friend PolyQ operator*(PolyQ lhs, const Rational& rhs) { return lhs *= rhs; }
    friend PolyQ operator-(PolyQ p);

    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    /// Polynomial long division: a = q*b + r with deg r < deg b.
    friend std::pair<PolyQ, PolyQ> div_rem(const PolyQ& a, const PolyQ& b);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Canonical associates are monic (zero stays zero).
template <>
struct RingTraits<PolyQ> {
    static std::string_view name() { return "polyq"; }
    static PolyQ zero() { return PolyQ(); }
    static PolyQ one() { return PolyQ(1); }
    static bool is_zero(const PolyQ& a) { return a.is_zero(); }
    static bool is_unit(const PolyQ& a) { return a.degree() == 0; }
    static PolyQ unit_inverse(const PolyQ& a);

    static BezoutTriple<PolyQ> ext_gcd(const PolyQ& a, const PolyQ& b);
    static PolyQ exact_div(const PolyQ& a, const PolyQ& b);
    static bool divides(const PolyQ& d, const PolyQ& a);
    static std::pair<PolyQ, PolyQ> normalize(const PolyQ& a);
    static std::pair<PolyQ, PolyQ> div_rem(const PolyQ& a, const PolyQ& b);
    /// Degree first, then the monic associates compared from the top coefficient down.
    static bool pivot_less(const PolyQ& a, const PolyQ& b);

    /// "[c0,c1,...]" ascending by degree; each ci is n or n/d with d > 0.
    static PolyQ parse(std::string_view text);
    static std::string format(const PolyQ& a);
};

} // namespace matdiv
