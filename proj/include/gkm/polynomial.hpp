// Sparse multivariate polynomials over an exact coefficient type.  The same
// container carries ordinary polynomials (nonnegative exponents) and Laurent
// polynomials (arbitrary exponents); operations that only make sense for one
// of the two say so.  Terms are kept in increasing graded-lex order with no
// zero coefficients stored.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/monomial.hpp"
#include "gkm/numeric.hpp"

namespace gkm {

template <class C>
class Poly {
public:
    using TermMap = std::map<Expo, C, GradedLexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, C c) {
        Poly p(nvars);
        p.add_term(Expo(nvars, 0), std::move(c));
        return p;
    }
    static Poly variable(int nvars, int i) {
        Expo e(nvars, 0);
        e.at(i) = 1;
        return monomial(nvars, e, C(1));
    }
    static Poly monomial(int nvars, Expo e, C c) {
        Poly p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    C coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Expo e, C c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw internal_error("polynomial term has wrong variable count");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // largest term in graded-lex order; polynomial must be nonzero
    const std::pair<const Expo, C>& leading_term() const {
        if (terms_.empty()) throw internal_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int64_t degree() const {  // -1 for the zero polynomial
        int64_t d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, gkm::degree(e));
        return d;
    }

    bool has_negative_exponents() const {
        for (const auto& [e, c] : terms_)
            if (!expo_nonneg(e)) return true;
        return false;
    }

    Poly homogeneous_part(int64_t d) const {
        Poly p(nvars_);
        for (const auto& [e, c] : terms_)
            if (gkm::degree(e) == d) p.terms_.emplace(e, c);
        return p;
    }

    // componentwise min/max exponent over all terms; nullopt for zero
    std::optional<std::pair<Expo, Expo>> exponent_hull() const {
        if (terms_.empty()) return std::nullopt;
        Expo lo = terms_.begin()->first, hi = lo;
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < nvars_; ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        return std::make_pair(lo, hi);
    }

    Poly& operator+=(const Poly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly p(nvars_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, C(-c));
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly p(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) p.add_term(expo_add(ea, eb), ca * cb);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const C& c) const {
        Poly p(nvars_);
        if (c == 0) return p;
        for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // total order compatible with ==, for use as container key
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
            [](const auto& s, const auto& t) {
                GradedLexLess less;
                if (less(s.first, t.first)) return true;
                if (less(t.first, s.first)) return false;
                return s.second < t.second;
            });
    }

    // substitute images[i] for variable i; ordinary polynomials only
    Poly compose(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw internal_error("compose: one image per variable required");
        int out_vars = images.empty() ? 0 : images.front().nvars();
        Poly acc(out_vars);
        for (const auto& [e, c] : terms_) {
            if (!expo_nonneg(e)) throw internal_error("compose: negative exponent");
            Poly t = Poly::constant(out_vars, c);
            for (int i = 0; i < nvars_; ++i)
                for (int32_t k = 0; k < e[i]; ++k) t *= images[i];
            acc += t;
        }
        return acc;
    }

    // canonical text form: terms in decreasing graded-lex order, e.g.
    // "3*y1^2*y2 - y3" or "1 - z1^-1*z2"
    std::string render(const std::vector<std::string>& names) const;

private:
    void check_same(const Poly& o) const {
        if (nvars_ != o.nvars_)
            throw internal_error("polynomial variable counts differ");
    }

    int nvars_;
    TermMap terms_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
std::optional<IntPoly> to_integral(const RatPoly& p);

// Single-divisor division with remainder over the rationals under graded-lex:
// f = quotient*g + remainder where no remainder term is divisible by the
// leading monomial of g.  Both canonical and, for a single divisor, a genuine
// ideal-membership test: remainder == 0 iff g | f over the rationals.
// Ordinary polynomials only; g must be nonzero.
struct RatDivision {
    RatPoly quotient;
    RatPoly remainder;
};
RatDivision reduce(const RatPoly& f, const RatPoly& g);

// Exact division result.  On failure `witness` explains why: the nonzero
// graded-lex remainder, or, when f = q*g holds over the rationals but q has a
// fractional coefficient (integral carriers only), the fractional q itself
// with `fractional` set.
template <class C>
struct Division {
    bool ok = false;
    Poly<C> quotient;
    RatPoly witness;
    bool fractional = false;
};

Division<Int> exact_div(const IntPoly& f, const IntPoly& g);
Division<Rational> exact_div(const RatPoly& f, const RatPoly& g);

// Laurent divisibility: monomials are units, so both operands are normalized
// by their trailing monomial (componentwise minimum exponent) and the shifted
// ordinary polynomials are divided; the quotient is shifted back.
Division<Int> exact_div_laurent(const IntPoly& f, const IntPoly& g);

// Strict parser for the render() format: signed integer or p/q coefficients,
// '*' products, '^' integer powers, variable names from `names`.
RatPoly parse_poly(const std::string& text, const std::vector<std::string>& names);

}  // namespace gkm
