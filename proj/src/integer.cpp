#include "matdiv/integer.hpp"

#include <cctype>

#include "matdiv/errors.hpp"

namespace matdiv {

Integer RingTraits<Integer>::unit_inverse(const Integer& a) {
    if (!is_unit(a)) throw NotDivisible("unit_inverse: " + a.get_str() + " is not a unit");
    return a;
}

BezoutTriple<Integer> RingTraits<Integer>::ext_gcd(const Integer& a, const Integer& b) {
    BezoutTriple<Integer> r;
    if (sgn(a) == 0 && sgn(b) == 0) return {Integer(0), Integer(0), Integer(0)};
    // mpz_gcdext always yields g >= 0.
    mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer RingTraits<Integer>::exact_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw DivisionByZero("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw NotDivisible("exact_div: " + b.get_str() + " does not divide " + a.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool RingTraits<Integer>::divides(const Integer& d, const Integer& a) {
    // mpz_divisible_p treats 0 | a as a == 0, matching exact_div semantics
    // except that exact_div(0, 0) throws; callers never rely on that case.
    if (sgn(d) == 0) return sgn(a) == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::pair<Integer, Integer> RingTraits<Integer>::normalize(const Integer& a) {
    if (sgn(a) < 0) return {Integer(-a), Integer(-1)};
    return {a, Integer(1)};
}

std::pair<Integer, Integer> RingTraits<Integer>::div_rem(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw DivisionByZero("div_rem: division by zero");
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer q = a - r;
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
    return {q, r};
}

bool RingTraits<Integer>::pivot_less(const Integer& a, const Integer& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

Integer RingTraits<Integer>::parse(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    if (pos == text.size()) throw ParseError("expected digits in integer literal", 0, pos + 1);
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("unexpected character '") + text[i] + "' in integer literal", 0, i + 1);
    }
    return Integer(std::string(text), 10);
}

std::string RingTraits<Integer>::format(const Integer& a) {
    return a.get_str();
}

} // namespace matdiv
