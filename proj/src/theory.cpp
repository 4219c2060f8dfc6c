#include "gkm/theory.hpp"

#include "gkm/errors.hpp"

namespace gkm {

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::H: return "H";
        case Theory::K: return "K";
        case Theory::MU: return "MU";
    }
    throw internal_error("unknown theory");
}

Theory parse_theory(const std::string& s) {
    if (s == "H") return Theory::H;
    if (s == "K") return Theory::K;
    if (s == "MU") return Theory::MU;
    throw input_error("unknown theory '" + s + "' (expected H, K, or MU)");
}

const IntPoly& Coefficient::int_poly() const {
    if (auto* p = std::get_if<IntPoly>(&value)) return *p;
    throw internal_error("coefficient is not an integer polynomial");
}

const RatPoly& Coefficient::rat_poly() const {
    if (auto* p = std::get_if<RatPoly>(&value)) return *p;
    throw internal_error("coefficient is not a rational polynomial");
}

const TruncSeries& Coefficient::series() const {
    if (auto* p = std::get_if<TruncSeries>(&value)) return *p;
    throw internal_error("coefficient is not a series");
}

TheorySpec TheorySpec::make(Theory theory, int rank, int trunc, bool rational) {
    if (rank < 1) throw input_error("theory needs at least one variable");
    if (rational && theory != Theory::H) throw input_error("rational coefficients are only supported over H");
    TheorySpec s;
    s.theory = theory;
    s.rank = rank;
    s.trunc = trunc;
    s.rational = rational;
    if (theory == Theory::MU) s.lazard();  // validates the window
    return s;
}

LazardRing TheorySpec::lazard() const {
    if (theory != Theory::MU) throw internal_error("series ring requested outside MU");
    return LazardRing::make(rank, trunc);
}

std::vector<std::string> TheorySpec::names() const {
    if (theory == Theory::MU) return lazard().names();
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(rank));
    const char* stem = theory == Theory::H ? "y" : "z";
    for (int i = 1; i <= rank; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

Coefficient TheorySpec::zero() const {
    switch (theory) {
        case Theory::H:
            if (rational) return {RatPoly{rank}};
            return {IntPoly{rank}};
        case Theory::K: return {IntPoly{rank}};
        case Theory::MU: return {TruncSeries{lazard()}};
    }
    throw internal_error("unknown theory");
}

Coefficient TheorySpec::one() const {
    switch (theory) {
        case Theory::H:
            if (rational) return {RatPoly::constant(rank, 1)};
            return {IntPoly::constant(rank, 1)};
        case Theory::K: return {IntPoly::constant(rank, 1)};
        case Theory::MU: return {TruncSeries::constant(lazard(), 1)};
    }
    throw internal_error("unknown theory");
}

namespace {

template <class F>
Coefficient zip(const TheorySpec& spec, const Coefficient& a, const Coefficient& b, F&& f) {
    spec.check(a);
    spec.check(b);
    if (auto* p = std::get_if<IntPoly>(&a.value)) return {f(*p, std::get<IntPoly>(b.value))};
    if (auto* p = std::get_if<RatPoly>(&a.value)) return {f(*p, std::get<RatPoly>(b.value))};
    return {f(std::get<TruncSeries>(a.value), std::get<TruncSeries>(b.value))};
}

}  // namespace

Coefficient TheorySpec::add(const Coefficient& a, const Coefficient& b) const {
    return zip(*this, a, b, [](const auto& x, const auto& y) { return x + y; });
}

Coefficient TheorySpec::sub(const Coefficient& a, const Coefficient& b) const {
    return zip(*this, a, b, [](const auto& x, const auto& y) { return x - y; });
}

Coefficient TheorySpec::mul(const Coefficient& a, const Coefficient& b) const {
    return zip(*this, a, b, [](const auto& x, const auto& y) { return x * y; });
}

Coefficient TheorySpec::neg(const Coefficient& a) const {
    check(a);
    return std::visit([](const auto& x) { return Coefficient{-x}; }, a.value);
}

Coefficient TheorySpec::scale(const Coefficient& a, const Int& c) const {
    check(a);
    if (auto* p = std::get_if<IntPoly>(&a.value)) return {p->scaled(c)};
    if (auto* p = std::get_if<RatPoly>(&a.value)) return {p->scaled(Rational{c})};
    return {TruncSeries{std::get<TruncSeries>(a.value).ring(),
                        std::get<TruncSeries>(a.value).flat().scaled(c)}};
}

bool TheorySpec::is_zero(const Coefficient& a) const {
    check(a);
    return std::visit([](const auto& x) { return x.is_zero(); }, a.value);
}

std::string TheorySpec::render(const Coefficient& a) const {
    check(a);
    auto nm = names();
    if (auto* p = std::get_if<IntPoly>(&a.value)) return p->render(nm);
    if (auto* p = std::get_if<RatPoly>(&a.value)) return p->render(nm);
    return std::get<TruncSeries>(a.value).render();
}

Coefficient TheorySpec::parse(const std::string& text) const {
    RatPoly raw = parse_poly(text, names());
    if (theory != Theory::K && raw.has_negative_exponents())
        throw input_error("negative exponents are only valid over K");
    if (theory == Theory::H && rational) return {raw};
    auto integral = to_integral(raw);
    if (!integral) throw input_error("class has fractional coefficients");
    if (theory == Theory::MU) {
        auto ring = lazard();
        for (const auto& [e, c] : integral->terms())
            if (ring.u_degree(e) > ring.trunc)
                throw input_error("class has a term beyond the series truncation");
        return {TruncSeries{ring, *integral}};
    }
    return {*integral};
}

Coefficient TheorySpec::euler_class(const std::vector<Int>& chi) const {
    if (static_cast<int>(chi.size()) != rank) throw input_error("character length does not match the rank");
    switch (theory) {
        case Theory::H: {
            IntPoly p{rank};
            for (int i = 0; i < rank; ++i)
                if (!chi[static_cast<size_t>(i)].is_zero())
                    p += IntPoly::variable(rank, i).scaled(chi[static_cast<size_t>(i)]);
            if (rational) return {to_rational(p)};
            return {p};
        }
        case Theory::K: {
            Expo e(static_cast<size_t>(rank), 0);
            for (int i = 0; i < rank; ++i) {
                const Int& m = chi[static_cast<size_t>(i)];
                if (m > INT32_MAX || m < INT32_MIN) throw input_error("character entry too large");
                e[static_cast<size_t>(i)] = m.convert_to<int32_t>();
            }
            IntPoly p = IntPoly::constant(rank, 1);
            p -= IntPoly::monomial(rank, e, 1);
            return {p};
        }
        case Theory::MU: {
            auto ring = lazard();
            TruncSeries acc{ring};
            for (int i = 0; i < rank; ++i) {
                const Int& m = chi[static_cast<size_t>(i)];
                if (m.is_zero()) continue;
                acc = fgl_sum(acc, fgl_multiple(TruncSeries::u_variable(ring, i), m));
            }
            return {acc};
        }
    }
    throw internal_error("unknown theory");
}

CoefficientDivision TheorySpec::exact_div(const Coefficient& f, const Coefficient& g) const {
    check(f);
    check(g);
    CoefficientDivision out;
    auto nm = names();
    switch (theory) {
        case Theory::H: {
            if (rational) {
                auto d = gkm::exact_div(f.rat_poly(), g.rat_poly());
                out.ok = d.ok;
                out.quotient = {d.quotient};
                if (!d.ok) out.witness = d.witness.render(nm);
                out.fractional = d.fractional;
                return out;
            }
            auto d = gkm::exact_div(f.int_poly(), g.int_poly());
            out.ok = d.ok;
            out.quotient = {d.quotient};
            if (!d.ok) out.witness = d.witness.render(nm);
            out.fractional = d.fractional;
            return out;
        }
        case Theory::K: {
            auto d = exact_div_laurent(f.int_poly(), g.int_poly());
            out.ok = d.ok;
            out.quotient = {d.quotient};
            if (!d.ok) out.witness = d.witness.render(nm);
            out.fractional = d.fractional;
            return out;
        }
        case Theory::MU: {
            auto d = exact_div_trunc(f.series(), g.series());
            out.ok = d.ok;
            out.quotient = {d.quotient};
            if (!d.ok) out.witness = d.witness.render(nm);
            out.fractional = d.fractional;
            return out;
        }
    }
    throw internal_error("unknown theory");
}

void TheorySpec::check(const Coefficient& a) const {
    switch (theory) {
        case Theory::H:
            if (rational) {
                if (a.rat_poly().nvars() != rank) throw internal_error("coefficient has the wrong variable count");
            } else {
                if (a.int_poly().nvars() != rank) throw internal_error("coefficient has the wrong variable count");
                if (a.int_poly().has_negative_exponents()) throw internal_error("negative exponent outside K");
            }
            return;
        case Theory::K:
            if (a.int_poly().nvars() != rank) throw internal_error("coefficient has the wrong variable count");
            return;
        case Theory::MU:
            if (!(a.series().ring() == lazard())) throw internal_error("series ring does not match the theory");
            return;
    }
    throw internal_error("unknown theory");
}

}  // namespace gkm
