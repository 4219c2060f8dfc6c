#include "gkm/numeric.hpp"

#include <sstream>

namespace gkm {

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
    size_t i = 0;
    auto read_int = [&]() -> Int {
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw bad();
        Int v(s.substr(digits, i - digits));
        return neg ? -v : v;
    };
    Int num = read_int();
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) throw bad();
    }
    if (i != s.size()) throw bad();
    return Rational(num) / Rational(den);
}

}  // namespace gkm
