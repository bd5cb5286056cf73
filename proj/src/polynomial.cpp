#include "matdiv/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "matdiv/errors.hpp"
#include "matdiv/integer.hpp"

namespace matdiv {

PolyQ::PolyQ(long constant) : PolyQ(Rational(constant)) {}

PolyQ::PolyQ(const Rational& constant) {
    if (sgn(constant) != 0) coeffs_.push_back(constant);
}

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

PolyQ::PolyQ(std::initializer_list<Rational> coefficients)
    : PolyQ(std::vector<Rational>(coefficients)) {}

PolyQ PolyQ::monomial(unsigned power, const Rational& coefficient) {
    std::vector<Rational> c(power + 1);
    c[power] = coefficient;
    return PolyQ(std::move(c));
}

Rational PolyQ::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void PolyQ::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& lhs, const PolyQ& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return PolyQ();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    PolyQ p;
    p.coeffs_ = std::move(out);
    p.trim();
    return p;
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs) {
    *this = *this * rhs;
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& rhs) {
    if (sgn(rhs) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

PolyQ operator-(PolyQ p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

std::pair<PolyQ, PolyQ> div_rem(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DivisionByZero("div_rem: division by the zero polynomial");
    if (a.degree() < b.degree()) return {PolyQ(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const Rational& lead = b.coeffs_.back();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational c = rem[k + db] / lead;
        quot[k] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
    }
    rem.resize(db);
    PolyQ q, r;
    q.coeffs_ = std::move(quot);
    q.trim();
    r.coeffs_ = std::move(rem);
    r.trim();
    return {q, r};
}

PolyQ RingTraits<PolyQ>::unit_inverse(const PolyQ& a) {
    if (!is_unit(a)) throw NotDivisible("unit_inverse: " + format(a) + " is not a unit");
    return PolyQ(Rational(1) / a.leading());
}

BezoutTriple<PolyQ> RingTraits<PolyQ>::ext_gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) return {PolyQ(), PolyQ(), PolyQ()};
    // Invariants: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    PolyQ r0 = a, r1 = b;
    PolyQ s0 = 1, s1 = 0;
    PolyQ t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = div_rem(r0, r1);
        PolyQ s2 = s0 - q * s1;
        PolyQ t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational scale = Rational(1) / r0.leading();
    return {r0 * scale, s0 * scale, t0 * scale};
}

PolyQ RingTraits<PolyQ>::exact_div(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div: division by the zero polynomial");
    auto [q, r] = div_rem(a, b);
    if (!r.is_zero()) throw NotDivisible("exact_div: " + format(b) + " does not divide " + format(a));
    return q;
}

bool RingTraits<PolyQ>::divides(const PolyQ& d, const PolyQ& a) {
    if (d.is_zero()) return a.is_zero();
    if (d.degree() == 0) return true;
    return div_rem(a, d).second.is_zero();
}

std::pair<PolyQ, PolyQ> RingTraits<PolyQ>::normalize(const PolyQ& a) {
    if (a.is_zero()) return {PolyQ(), PolyQ(1)};
    const Rational lead = a.leading();
    return {a * (Rational(1) / lead), PolyQ(lead)};
}

std::pair<PolyQ, PolyQ> RingTraits<PolyQ>::div_rem(const PolyQ& a, const PolyQ& b) {
    return matdiv::div_rem(a, b);
}

bool RingTraits<PolyQ>::pivot_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.is_zero()) return false;
    const Rational la = Rational(1) / a.leading();
    const Rational lb = Rational(1) / b.leading();
    for (int i = a.degree(); i >= 0; --i) {
        const Rational ca = a.coefficient(i) * la;
        const Rational cb = b.coefficient(i) * lb;
        if (ca != cb) return ca < cb;
    }
    return false;
}

namespace {

// n or n/d with d > 0, starting at text[pos]; advances pos.
Rational parse_rational(std::string_view text, std::size_t& pos) {
    auto digits = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t end = digits(pos);
    if (end == pos) throw ParseError("expected digits in rational coefficient", 0, pos + 1);
    std::string num(text.substr(start, end - start));
    pos = end;
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        end = digits(pos);
        if (end == pos) throw ParseError("expected positive denominator", 0, pos + 1);
        den = std::string(text.substr(pos, end - pos));
        if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator", 0, pos + 1);
        pos = end;
    }
    Rational q(Integer(num, 10), Integer(den, 10));
    q.canonicalize();
    return q;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

} // namespace

PolyQ RingTraits<PolyQ>::parse(std::string_view text) {
    std::size_t pos = 0;
    if (text.empty() || text[0] != '[') throw ParseError("polynomial literal must start with '['", 0, 1);
    ++pos;
    std::vector<Rational> coeffs;
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_spaces(text, pos);
            coeffs.push_back(parse_rational(text, pos));
            skip_spaces(text, pos);
            if (pos >= text.size()) throw ParseError("unterminated polynomial literal", 0, pos + 1);
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            if (text[pos] != ',')
                throw ParseError(std::string("unexpected character '") + text[pos] + "' in polynomial literal", 0,
                                 pos + 1);
            ++pos;
        }
    }
    if (pos != text.size()) throw ParseError("trailing characters after polynomial literal", 0, pos + 1);
    return PolyQ(std::move(coeffs));
}

std::string RingTraits<PolyQ>::format(const PolyQ& a) {
    if (a.is_zero()) return "[0]";
    std::string out = "[";
    bool first = true;
    for (const auto& c : a.coefficients()) {
        if (!first) out += ',';
        first = false;
        out += c.get_str();
    }
    out += ']';
    return out;
}

} // namespace matdiv
