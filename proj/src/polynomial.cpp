#include "gkm/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace gkm {

std::vector<Expo> monomials_of_degree(int nvars, int deg) {
    std::vector<Expo> out;
    if (deg < 0) return out;
    if (nvars == 0) {
        if (deg == 0) out.push_back(Expo{});
        return out;
    }
    Expo cur(nvars, 0);
    // walk the compositions of deg into nvars parts
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<Expo> monomials_up_to_degree(int nvars, int deg) {
    std::vector<Expo> out;
    for (int d = 0; d <= deg; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Expo> monomials_in_box(const Expo& lo, const Expo& hi) {
    std::vector<Expo> out;
    const int n = static_cast<int>(lo.size());
    for (int i = 0; i < n; ++i)
        if (lo[i] > hi[i]) return out;
    Expo cur = lo;
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == hi[i]) {
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

namespace {

template <class C>
std::string render_impl(const Poly<C>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    if (static_cast<int>(names.size()) != p.nvars())
        throw internal_error("render: one name per variable required");
    std::ostringstream os;
    bool first = true;
    // decreasing graded-lex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        C a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << to_string(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << to_string(a) << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace

template <>
std::string Poly<Int>::render(const std::vector<std::string>& names) const {
    return render_impl(*this, names);
}

template <>
std::string Poly<Rational>::render(const std::vector<std::string>& names) const {
    return render_impl(*this, names);
}

RatPoly to_rational(const IntPoly& p) {
    RatPoly q(p.nvars());
    for (const auto& [e, c] : p.terms()) q.add_term(e, Rational(c));
    return q;
}

std::optional<IntPoly> to_integral(const RatPoly& p) {
    IntPoly q(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (!is_integer(c)) return std::nullopt;
        q.add_term(e, numerator(c));
    }
    return q;
}

RatDivision reduce(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw input_error("division by the zero polynomial");
    if (f.has_negative_exponents() || g.has_negative_exponents())
        throw internal_error("reduce: Laurent operands must be normalized first");
    const auto& [ge, gc] = g.leading_term();
    RatDivision out{RatPoly(f.nvars()), RatPoly(f.nvars())};
    RatPoly rest = f;
    while (!rest.is_zero()) {
        const auto& [re, rc] = rest.leading_term();
        if (expo_divides(ge, re)) {
            RatPoly t = RatPoly::monomial(f.nvars(), expo_sub(re, ge), rc / gc);
            out.quotient += t;
            rest -= t * g;
        } else {
            out.remainder.add_term(re, rc);
            rest.add_term(re, -rc);
        }
    }
    return out;
}

Division<Rational> exact_div(const RatPoly& f, const RatPoly& g) {
    auto div = reduce(f, g);
    Division<Rational> out;
    if (div.remainder.is_zero()) {
        out.ok = true;
        out.quotient = std::move(div.quotient);
    } else {
        out.witness = std::move(div.remainder);
    }
    return out;
}

Division<Int> exact_div(const IntPoly& f, const IntPoly& g) {
    auto div = reduce(to_rational(f), to_rational(g));
    Division<Int> out;
    if (!div.remainder.is_zero()) {
        out.witness = std::move(div.remainder);
        return out;
    }
    if (auto q = to_integral(div.quotient)) {
        out.ok = true;
        out.quotient = std::move(*q);
    } else {
        out.witness = std::move(div.quotient);
        out.fractional = true;
    }
    return out;
}

Division<Int> exact_div_laurent(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw input_error("division by the zero polynomial");
    if (f.is_zero()) {
        Division<Int> out;
        out.ok = true;
        out.quotient = IntPoly(f.nvars());
        return out;
    }
    const int n = f.nvars();
    Expo flo = f.exponent_hull()->first;
    Expo glo = g.exponent_hull()->first;
    IntPoly fs(n), gs(n);
    for (const auto& [e, c] : f.terms()) fs.add_term(expo_sub(e, flo), c);
    for (const auto& [e, c] : g.terms()) gs.add_term(expo_sub(e, glo), c);
    Division<Int> div = exact_div(fs, gs);
    if (!div.ok) return div;
    // the quotient picks up the unit z^(flo - glo)
    Expo shift = expo_sub(flo, glo);
    IntPoly q(n);
    for (const auto& [e, c] : div.quotient.terms()) q.add_term(expo_add(e, shift), c);
    div.quotient = std::move(q);
    return div;
}

namespace {

struct PolyParser {
    const std::string& s;
    const std::vector<std::string>& names;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw input_error("polynomial parse error at offset " + std::to_string(i) + ": " + why +
                          " in '" + s + "'");
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Int parse_int_digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return Int(s.substr(start, i - start));
    }

    int32_t parse_exponent() {
        skip_ws();
        bool neg = eat('-');
        Int v = parse_int_digits();
        if (v > 1'000'000) fail("exponent out of range");
        auto x = v.convert_to<int32_t>();
        return neg ? -x : x;
    }

    std::optional<int> parse_name() {
        skip_ws();
        // longest match wins so that e.g. "y1" does not shadow "y12"
        int best = -1;
        size_t best_len = 0;
        for (size_t k = 0; k < names.size(); ++k) {
            const auto& nm = names[k];
            if (nm.size() > best_len && s.compare(i, nm.size(), nm) == 0) {
                best = static_cast<int>(k);
                best_len = nm.size();
            }
        }
        if (best < 0) return std::nullopt;
        i += best_len;
        return best;
    }

    // coefficient ["*"] factor ("*" factor)*
    RatPoly parse_term() {
        const int n = static_cast<int>(names.size());
        Rational coef(1);
        Expo e(n, 0);
        bool saw_factor = false;
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            Int num = parse_int_digits();
            Int den = 1;
            if (eat('/')) {
                den = parse_int_digits();
                if (den == 0) fail("zero denominator");
            }
            coef = Rational(num) / Rational(den);
            saw_factor = true;
            if (!eat('*')) return RatPoly::monomial(n, e, coef);
        }
        while (true) {
            auto v = parse_name();
            if (!v) {
                if (!saw_factor) fail("expected coefficient or variable");
                fail("expected variable name");
            }
            int32_t k = 1;
            if (eat('^')) k = parse_exponent();
            e[*v] += k;
            saw_factor = true;
            if (!eat('*')) break;
        }
        return RatPoly::monomial(n, e, coef);
    }

    RatPoly parse() {
        const int n = static_cast<int>(names.size());
        RatPoly acc(n);
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            RatPoly t = parse_term();
            acc += neg ? -t : t;
            skip_ws();
            if (i == s.size()) break;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                fail("expected '+', '-' or end of input");
        }
        return acc;
    }
};

}  // namespace

RatPoly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    PolyParser p{text, names};
    return p.parse();
}

}  // namespace gkm
