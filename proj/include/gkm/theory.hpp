// Coefficient carriers for the three supported theories and the operations
// the congruence machinery needs from each of them, behind one dispatch
// point.  A TheorySpec fixes the carrier: polynomials in y_1..y_n for H
// (integer or rational coefficients), Laurent polynomials in z_1..z_n for K,
// truncated group-law series in u_1..u_n for MU.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gkm/lazard.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

enum class Theory { H, K, MU };

std::string theory_name(Theory t);
Theory parse_theory(const std::string& s);

struct Coefficient {
    std::variant<IntPoly, RatPoly, TruncSeries> value;

    const IntPoly& int_poly() const;
    const RatPoly& rat_poly() const;
    const TruncSeries& series() const;

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value == b.value; }
};

struct CoefficientDivision {
    bool ok = false;
    Coefficient quotient;
    std::string witness;  // rendered remainder, or the fractional quotient
    bool fractional = false;
};

struct TheorySpec {
    Theory theory = Theory::H;
    int rank = 0;
    int trunc = 3;          // series window, MU only
    bool rational = false;  // H over Q

    static TheorySpec make(Theory theory, int rank, int trunc = 3, bool rational = false);

    LazardRing lazard() const;  // MU only
    std::vector<std::string> names() const;

    Coefficient zero() const;
    Coefficient one() const;
    Coefficient add(const Coefficient& a, const Coefficient& b) const;
    Coefficient sub(const Coefficient& a, const Coefficient& b) const;
    Coefficient mul(const Coefficient& a, const Coefficient& b) const;
    Coefficient neg(const Coefficient& a) const;
    Coefficient scale(const Coefficient& a, const Int& c) const;
    bool is_zero(const Coefficient& a) const;
    std::string render(const Coefficient& a) const;
    Coefficient parse(const std::string& text) const;

    // the Euler class of an integral character, the divisor attached to an
    // edge: sum m_i y_i over H, 1 - z^chi over K, the group-law sum of the
    // m_i-series of the u_i over MU
    Coefficient euler_class(const std::vector<Int>& chi) const;

    CoefficientDivision exact_div(const Coefficient& f, const Coefficient& g) const;

    void check(const Coefficient& a) const;  // carrier matches this spec

    friend bool operator==(const TheorySpec& a, const TheorySpec& b) {
        return a.theory == b.theory && a.rank == b.rank && a.rational == b.rational &&
               (a.theory != Theory::MU || a.trunc == b.trunc);
    }
};

}  // namespace gkm
