#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "matdiv/ring.hpp"

namespace matdiv {

/// Arbitrary-precision integer; the ring Z.
using Integer = mpz_class;

// Canonical associates are non-negative.
template <>
struct RingTraits<Integer> {
    static std::string_view name() { return "int"; }
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_zero(const Integer& a) { return sgn(a) == 0; }
    static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
    static Integer unit_inverse(const Integer& a);

    static BezoutTriple<Integer> ext_gcd(const Integer& a, const Integer& b);
    static Integer exact_div(const Integer& a, const Integer& b);
    static bool divides(const Integer& d, const Integer& a);
    static std::pair<Integer, Integer> normalize(const Integer& a);
    /// Floor division for positive b: remainder in [0, |b|).
    static std::pair<Integer, Integer> div_rem(const Integer& a, const Integer& b);
    static bool pivot_less(const Integer& a, const Integer& b);

    static Integer parse(std::string_view text);
    static std::string format(const Integer& a);
};

} // namespace matdiv
