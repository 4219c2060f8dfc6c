// Truncated formal-group-law arithmetic for the complex-cobordism carrier.
// Series live in Z[a_ij][u_1..u_n] with every term of u-degree > N discarded;
// there is one symbol a_ij per unordered pair i <= j with i + j <= N (higher
// symbols cannot touch terms of u-degree <= N), and the group law is
//
//   F(x, y) = x + y + sum a_ij x^i y^j .
//
// a_ij carries internal degree i + j - 1, so the Euler series of a character
// is homogeneous of combined degree 1 (u-degree minus internal a-degree).
// At truncation N <= 3 the free symbols satisfy every identity we check;
// deeper truncations would need the relations forced by associativity, which
// this layer does not model.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

struct LazardRing {
    int rank = 0;   // u variables
    int trunc = 0;  // N
    std::vector<std::pair<int, int>> pairs;

    static LazardRing make(int rank, int trunc);

    int nvars() const { return rank + static_cast<int>(pairs.size()); }
    int pair_index(int i, int j) const;  // offset into the a-block
    std::vector<std::string> names() const;

    int64_t u_degree(const Expo& e) const;
    int64_t combined_degree(const Expo& e) const;

    friend bool operator==(const LazardRing& a, const LazardRing& b) {
        return a.rank == b.rank && a.trunc == b.trunc;
    }
};

class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(LazardRing ring) : ring_(std::move(ring)), p_(ring_.nvars()) {}
    TruncSeries(LazardRing ring, IntPoly flat);  // drops terms of u-degree > N

    static TruncSeries constant(const LazardRing& ring, Int c);
    static TruncSeries u_variable(const LazardRing& ring, int i);

    const LazardRing& ring() const { return ring_; }
    const IntPoly& flat() const { return p_; }

    bool is_zero() const { return p_.is_zero(); }
    // no term of u-degree zero (needed before substituting into the group law)
    bool augmented() const;
    // terms of u-degree exactly d
    TruncSeries u_part(int64_t d) const;
    // homogeneous of the given combined degree (zero counts as homogeneous)
    bool homogeneous_of(int64_t cd) const;

    // substitute integers for every a symbol; the result only involves u's
    IntPoly specialize(const std::vector<Int>& a_values) const;
    // the u-polynomial, provided no a symbol occurs
    std::optional<IntPoly> pure_u() const;

    std::string render() const { return p_.render(ring_.names()); }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    TruncSeries operator-() const;
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.ring_ == b.ring_ && a.p_ == b.p_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    void check_same(const TruncSeries& o) const;

    LazardRing ring_;
    IntPoly p_;
};

// group law applied to two augmented series
TruncSeries fgl_sum(const TruncSeries& x, const TruncSeries& y);
// the formal inverse: fgl_sum(x, fgl_inverse(x)) == 0 up to truncation
TruncSeries fgl_inverse(const TruncSeries& x);
// the m-series [m](x), any integer m, via a double-and-add ladder
TruncSeries fgl_multiple(const TruncSeries& x, const Int& m);

// Division to truncation: quotient q with f = q*g up to u-degree N, solved
// degree by degree against g's u-linear part, which must be a nonzero
// integer-coefficient linear form in the u's alone (true of every Euler
// series of a nonzero character).  Failure reports the graded remainder, or
// the fractional quotient piece when division only works over Q.
struct TruncDivision {
    bool ok = false;
    TruncSeries quotient;
    RatPoly witness;  // in the flattened variables
    bool fractional = false;
};
TruncDivision exact_div_trunc(const TruncSeries& f, const TruncSeries& g);

}  // namespace gkm
