// Exact scalar types used throughout: arbitrary-precision integers and
// rationals, plus the handful of number-theoretic helpers the rest of the
// library leans on.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// floor(a / b) for b != 0, exact in both signs
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// nearest integer to a / b, ties toward even (deterministic symmetric rounding)
inline Int round_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    Int r = a - q * b;        // 0 <= r < |b|
    Int twice = 2 * r;
    Int ab = abs(b);
    if (twice > ab) return q + 1;
    if (twice < ab) return q;
    return (q % 2 == 0) ? q : q + 1;
}

// least positive integer r with r*q integral, i.e. the (positive) denominator
inline Int integrality_scale(const Rational& q) { return abs(denominator(q)); }

// least positive integer r with r*v integral for every component
inline Int integrality_scale(const std::vector<Rational>& v) {
    Int r = 1;
    for (const auto& q : v) r = lcm(r, integrality_scale(q));
    return r;
}

std::string to_string(const Int& n);
std::string to_string(const Rational& q);  // "p" or "p/q", q > 0 reduced

// parses "p" or "p/q" with optional sign; throws std::invalid_argument on junk
Rational parse_rational(const std::string& s);

}  // namespace gkm
