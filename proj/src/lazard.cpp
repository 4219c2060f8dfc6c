#include "gkm/lazard.hpp"

#include <algorithm>
#include <string>

#include "gkm/errors.hpp"

namespace gkm {

LazardRing LazardRing::make(int rank, int trunc) {
    if (rank < 1) throw input_error("series ring needs at least one u variable");
    if (trunc < 1) throw input_error("series truncation must be at least 1");
    if (trunc > 9) throw input_error("series truncation above 9 is not supported");
    LazardRing r;
    r.rank = rank;
    r.trunc = trunc;
    for (int s = 2; s <= trunc; ++s)
        for (int i = 1; 2 * i <= s; ++i) r.pairs.emplace_back(i, s - i);
    return r;
}

int LazardRing::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k] == std::pair<int, int>{i, j}) return static_cast<int>(k);
    throw internal_error("a_ij outside the truncation window");
}

std::vector<std::string> LazardRing::names() const {
    std::vector<std::string> out;
    out.reserve(nvars());
    for (int i = 1; i <= rank; ++i) out.push_back("u" + std::to_string(i));
    for (auto [i, j] : pairs) out.push_back("a" + std::to_string(i) + std::to_string(j));
    return out;
}

int64_t LazardRing::u_degree(const Expo& e) const {
    int64_t d = 0;
    for (int i = 0; i < rank; ++i) d += e[static_cast<size_t>(i)];
    return d;
}

int64_t LazardRing::combined_degree(const Expo& e) const {
    int64_t d = u_degree(e);
    for (size_t k = 0; k < pairs.size(); ++k) {
        auto [i, j] = pairs[k];
        d -= static_cast<int64_t>(e[static_cast<size_t>(rank) + k]) * (i + j - 1);
    }
    return d;
}

TruncSeries::TruncSeries(LazardRing ring, IntPoly flat) : ring_(std::move(ring)), p_(ring_.nvars()) {
    if (flat.nvars() != ring_.nvars()) throw internal_error("series polynomial has the wrong variable count");
    for (const auto& [e, c] : flat.terms()) {
        if (ring_.u_degree(e) <= ring_.trunc) p_.add_term(e, c);
    }
}

TruncSeries TruncSeries::constant(const LazardRing& ring, Int c) {
    return TruncSeries{ring, IntPoly::constant(ring.nvars(), std::move(c))};
}

TruncSeries TruncSeries::u_variable(const LazardRing& ring, int i) {
    if (i < 0 || i >= ring.rank) throw internal_error("u variable index out of range");
    return TruncSeries{ring, IntPoly::variable(ring.nvars(), i)};
}

bool TruncSeries::augmented() const {
    for (const auto& [e, c] : p_.terms())
        if (ring_.u_degree(e) == 0) return false;
    return true;
}

TruncSeries TruncSeries::u_part(int64_t d) const {
    TruncSeries out{ring_};
    for (const auto& [e, c] : p_.terms())
        if (ring_.u_degree(e) == d) out.p_.add_term(e, c);
    return out;
}

bool TruncSeries::homogeneous_of(int64_t cd) const {
    for (const auto& [e, c] : p_.terms())
        if (ring_.combined_degree(e) != cd) return false;
    return true;
}

IntPoly TruncSeries::specialize(const std::vector<Int>& a_values) const {
    if (a_values.size() != ring_.pairs.size())
        throw input_error("specialization needs one value per a symbol");
    IntPoly out{ring_.rank};
    for (const auto& [e, c] : p_.terms()) {
        Int coef = c;
        for (size_t k = 0; k < ring_.pairs.size() && !coef.is_zero(); ++k) {
            int32_t pw = e[static_cast<size_t>(ring_.rank) + k];
            for (int32_t t = 0; t < pw; ++t) coef *= a_values[k];
        }
        if (coef.is_zero()) continue;
        Expo ue(e.begin(), e.begin() + ring_.rank);
        out.add_term(ue, coef);
    }
    return out;
}

std::optional<IntPoly> TruncSeries::pure_u() const {
    IntPoly out{ring_.rank};
    for (const auto& [e, c] : p_.terms()) {
        for (size_t k = 0; k < ring_.pairs.size(); ++k)
            if (e[static_cast<size_t>(ring_.rank) + k] != 0) return std::nullopt;
        out.add_term(Expo(e.begin(), e.begin() + ring_.rank), c);
    }
    return out;
}

void TruncSeries::check_same(const TruncSeries& o) const {
    if (!(ring_ == o.ring_)) throw internal_error("mixed series rings");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_same(o);
    p_ += o.p_;
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_same(o);
    p_ -= o.p_;
    return *this;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out{ring_};
    out.p_ = -p_;
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_same(b);
    return TruncSeries{a.ring_, a.p_ * b.p_};
}

namespace {

// powers x^1..x^max of an augmented series; x^i is zero once i > N
std::vector<TruncSeries> series_powers(const TruncSeries& x, int max) {
    std::vector<TruncSeries> pw;
    pw.push_back(x);
    for (int i = 2; i <= max; ++i) pw.push_back(pw.back() * x);
    return pw;
}

void require_augmented(const TruncSeries& x) {
    if (!x.augmented()) throw input_error("group-law argument has a term of u-degree zero");
}

}  // namespace

TruncSeries fgl_sum(const TruncSeries& x, const TruncSeries& y) {
    require_augmented(x);
    require_augmented(y);
    const LazardRing& ring = x.ring();
    TruncSeries out = x + y;
    if (x.is_zero() || y.is_zero()) return out;
    auto xp = series_powers(x, ring.trunc - 1);
    auto yp = series_powers(y, ring.trunc - 1);
    for (int i = 1; i < ring.trunc; ++i)
        for (int j = 1; i + j <= ring.trunc; ++j) {
            IntPoly a = IntPoly::variable(ring.nvars(), ring.rank + ring.pair_index(i, j));
            out += TruncSeries{ring, a} * xp[static_cast<size_t>(i - 1)] * yp[static_cast<size_t>(j - 1)];
        }
    return out;
}

TruncSeries fgl_inverse(const TruncSeries& x) {
    require_augmented(x);
    const LazardRing& ring = x.ring();
    auto xp = series_powers(x, ring.trunc - 1);
    // iterating z <- -x - sum a_ij x^i z^j fixes z through one more u-degree
    // per round, so N rounds settle everything the truncation keeps
    TruncSeries z = -x;
    for (int round = 0; round < ring.trunc; ++round) {
        TruncSeries next = -x;
        auto zp = series_powers(z, ring.trunc - 1);
        for (int i = 1; i < ring.trunc; ++i)
            for (int j = 1; i + j <= ring.trunc; ++j) {
                IntPoly a = IntPoly::variable(ring.nvars(), ring.rank + ring.pair_index(i, j));
                next -= TruncSeries{ring, a} * xp[static_cast<size_t>(i - 1)] * zp[static_cast<size_t>(j - 1)];
            }
        if (next == z) break;
        z = next;
    }
    return z;
}

TruncSeries fgl_multiple(const TruncSeries& x, const Int& m) {
    if (m < 0) return fgl_inverse(fgl_multiple(x, -m));
    TruncSeries acc{x.ring()};
    if (m.is_zero()) return acc;
    std::vector<bool> bits;
    for (Int v = m; !v.is_zero(); v >>= 1) bits.push_back((v & 1) != 0);
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        acc = fgl_sum(acc, acc);
        if (*it) acc = fgl_sum(acc, x);
    }
    return acc;
}

TruncDivision exact_div_trunc(const TruncSeries& f, const TruncSeries& g) {
    if (!(f.ring() == g.ring())) throw internal_error("mixed series rings");
    const LazardRing& ring = f.ring();
    TruncDivision out;
    out.quotient = TruncSeries{ring};
    out.witness = RatPoly{ring.nvars()};
    if (g.is_zero()) throw input_error("division by the zero series");
    if (!g.u_part(0).is_zero()) throw input_error("series divisor has a term of u-degree zero");

    IntPoly g1 = g.u_part(1).flat();
    if (g1.is_zero()) throw input_error("series divisor has no u-linear part");
    for (const auto& [e, c] : g1.terms())
        for (size_t k = 0; k < ring.pairs.size(); ++k)
            if (e[static_cast<size_t>(ring.rank) + k] != 0)
                throw input_error("series divisor's u-linear part involves an a symbol");

    TruncSeries f0 = f.u_part(0);
    if (!f0.is_zero()) {
        out.witness = to_rational(f0.flat());
        return out;
    }

    std::vector<TruncSeries> gparts;  // g_2..g_N
    for (int d = 2; d <= ring.trunc; ++d) gparts.push_back(g.u_part(d));

    std::vector<TruncSeries> q;  // q[d-1] has u-degree d-1
    TruncSeries quotient{ring};
    for (int d = 1; d <= ring.trunc; ++d) {
        TruncSeries rhs = f.u_part(d);
        for (int i = 2; i <= d; ++i)
            rhs -= q[static_cast<size_t>(d - i)] * gparts[static_cast<size_t>(i - 2)];
        RatDivision step = reduce(to_rational(rhs.flat()), to_rational(g1));
        if (!step.remainder.is_zero()) {
            out.witness = step.remainder;
            return out;
        }
        auto integral = to_integral(step.quotient);
        if (!integral) {
            out.witness = step.quotient;
            out.fractional = true;
            return out;
        }
        TruncSeries qd{ring, *integral};
        q.push_back(qd);
        quotient += qd;
    }
    out.ok = true;
    out.quotient = quotient;
    return out;
}

}  // namespace gkm
