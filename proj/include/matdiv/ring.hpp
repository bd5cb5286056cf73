#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace matdiv {

/// Bezout data for a pair (a, b): u*a + v*b == g, with g the canonical gcd.
template <class T>
struct BezoutTriple {
    T g;
    T u;
    T v;
};

/// Scalar operations of a commutative elementary divisor domain.
///
/// Specialised for each concrete scalar type (see integer.hpp and
/// polynomial.hpp). Every operation is exact. The canonical associate of a
/// nonzero element is the one returned by normalize(); gcds are always
/// canonical, so comparing invariant factors is plain equality.
template <class T>
struct RingTraits;

template <class T>
concept EuclideanDomain = std::regular<T> && requires(const T& a, const T& b, std::string_view text) {
    { RingTraits<T>::name() } -> std::convertible_to<std::string_view>;
    { RingTraits<T>::zero() } -> std::same_as<T>;
    { RingTraits<T>::one() } -> std::same_as<T>;
    { RingTraits<T>::is_zero(a) } -> std::same_as<bool>;
    { RingTraits<T>::is_unit(a) } -> std::same_as<bool>;
    { RingTraits<T>::unit_inverse(a) } -> std::same_as<T>;
    { RingTraits<T>::ext_gcd(a, b) } -> std::same_as<BezoutTriple<T>>;
    { RingTraits<T>::exact_div(a, b) } -> std::same_as<T>;
    { RingTraits<T>::divides(a, b) } -> std::same_as<bool>;
    { RingTraits<T>::normalize(a) } -> std::same_as<std::pair<T, T>>;
    { RingTraits<T>::div_rem(a, b) } -> std::same_as<std::pair<T, T>>;
    { RingTraits<T>::pivot_less(a, b) } -> std::same_as<bool>;
    { RingTraits<T>::parse(text) } -> std::same_as<T>;
    { RingTraits<T>::format(a) } -> std::same_as<std::string>;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
};

template <EuclideanDomain T>
BezoutTriple<T> ext_gcd(const T& a, const T& b) {
    return RingTraits<T>::ext_gcd(a, b);
}

template <EuclideanDomain T>
T exact_div(const T& a, const T& b) {
    return RingTraits<T>::exact_div(a, b);
}

/// (canonical, unit) with canonical * unit == a.
template <EuclideanDomain T>
std::pair<T, T> normalize(const T& a) {
    return RingTraits<T>::normalize(a);
}

/// True iff d | a, i.e. exact_div(a, d) would succeed.
template <EuclideanDomain T>
bool divides(const T& d, const T& a) {
    return RingTraits<T>::divides(d, a);
}

template <EuclideanDomain T>
bool is_zero(const T& a) {
    return RingTraits<T>::is_zero(a);
}

template <EuclideanDomain T>
bool is_unit(const T& a) {
    return RingTraits<T>::is_unit(a);
}

} // namespace matdiv
