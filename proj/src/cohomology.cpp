#include "gkm/cohomology.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

Expo add_expo(const Expo& a, const Expo& b) {
    Expo e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
    return e;
}

Expo sub_expo(const Expo& a, const Expo& b) {
    Expo e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
    return e;
}

void monomials_exact_rec(int n, int pos, int32_t left, Expo& cur, std::vector<Expo>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = left;
        out.push_back(cur);
        return;
    }
    for (int32_t v = 0; v <= left; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        monomials_exact_rec(n, pos + 1, left - v, cur, out);
    }
}

std::vector<Expo> monomials_exact(int n, int64_t d) {
    std::vector<Expo> out;
    if (d < 0) return out;
    Expo cur(static_cast<size_t>(n), 0);
    monomials_exact_rec(n, 0, static_cast<int32_t>(d), cur, out);
    return out;
}

std::vector<Expo> monomials_up_to(int n, int64_t d) {
    std::vector<Expo> out;
    for (int64_t k = 0; k <= d; ++k) {
        auto part = monomials_exact(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Expo> box_monomials(const Expo& lo, const Expo& hi) {
    std::vector<Expo> out;
    for (size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return out;
    Expo cur = lo;
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < cur.size()) {
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            ++i;
        }
        if (i == cur.size()) break;
    }
    return out;
}

// flattened monomials of the given combined degree within the series window
std::vector<Expo> mu_support(const LazardRing& ring, int64_t cd) {
    std::vector<Expo> out;
    int np = static_cast<int>(ring.pairs.size());
    std::vector<int64_t> w(static_cast<size_t>(np));
    for (int t = 0; t < np; ++t)
        w[static_cast<size_t>(t)] = ring.pairs[static_cast<size_t>(t)].first + ring.pairs[static_cast<size_t>(t)].second - 1;

    std::vector<int32_t> a(static_cast<size_t>(np), 0);
    auto emit = [&](int64_t weight) {
        int64_t udeg = cd + weight;
        if (udeg < 0 || udeg > ring.trunc) return;
        for (const auto& u : monomials_exact(ring.rank, udeg)) {
            Expo e(static_cast<size_t>(ring.nvars()), 0);
            std::copy(u.begin(), u.end(), e.begin());
            std::copy(a.begin(), a.end(), e.begin() + ring.rank);
            out.push_back(e);
        }
    };
    auto rec = [&](auto&& self, int t, int64_t weight) -> void {
        if (t == np) {
            emit(weight);
            return;
        }
        for (int32_t v = 0;; ++v) {
            a[static_cast<size_t>(t)] = v;
            int64_t next = weight + v * w[static_cast<size_t>(t)];
            if (cd + next > ring.trunc) break;
            self(self, t + 1, next);
        }
        a[static_cast<size_t>(t)] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_parallel(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

int flat_vars(const TheorySpec& spec) {
    return spec.theory == Theory::MU ? spec.lazard().nvars() : spec.rank;
}

IntPoly flat_of(const TheorySpec& spec, const Coefficient& c) {
    return spec.theory == Theory::MU ? c.series().flat() : c.int_poly();
}

Coefficient lift_flat(const TheorySpec& spec, IntPoly p) {
    if (spec.theory == Theory::MU) return Coefficient{TruncSeries(spec.lazard(), std::move(p))};
    return Coefficient{std::move(p)};
}

// one candidate support for the unknown value plus one for each quotient
struct Attempt {
    std::vector<Expo> xsupp;
    std::vector<std::vector<Expo>> qsupp;
};

template <class C>
struct Assembled {
    Mat<C> A;
    std::vector<C> b;
    std::vector<Expo> free_x;
};

// rows encode x(e) - sum_f q_f g(e - f) = v(e) per congruence and exponent;
// pinned coefficients of x move to the right-hand side
template <class C>
Assembled<C> assemble(int nvars, const std::vector<Poly<C>>& values, const std::vector<Poly<C>>& divisors,
                      const Attempt& att, const std::map<Expo, C>* pinned, const LazardRing* ring) {
    Assembled<C> out;
    std::map<Expo, int> xcol;
    for (const auto& e : att.xsupp) {
        if (pinned && pinned->count(e)) continue;
        if (!xcol.count(e)) {
            int idx = static_cast<int>(out.free_x.size());
            xcol[e] = idx;
            out.free_x.push_back(e);
        }
    }
    int cols = static_cast<int>(out.free_x.size());
    std::vector<int> qbase(values.size());
    for (size_t c = 0; c < values.size(); ++c) {
        qbase[c] = cols;
        cols += static_cast<int>(att.qsupp[c].size());
    }

    std::vector<std::pair<size_t, Expo>> rows;
    for (size_t c = 0; c < values.size(); ++c) {
        std::set<Expo> exps(att.xsupp.begin(), att.xsupp.end());
        for (const auto& [e, coef] : values[c].terms()) exps.insert(e);
        for (const auto& f : att.qsupp[c])
            for (const auto& [h, coef] : divisors[c].terms()) exps.insert(add_expo(f, h));
        for (const auto& e : exps) {
            if (ring && ring->u_degree(e) > ring->trunc) continue;
            rows.emplace_back(c, e);
        }
    }

    out.A = Mat<C>(static_cast<int>(rows.size()), cols);
    out.b.assign(rows.size(), C(0));
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& [c, e] = rows[r];
        C rhs = values[c].coefficient(e);
        auto it = xcol.find(e);
        if (it != xcol.end()) out.A(static_cast<int>(r), it->second) = C(1);
        if (pinned) {
            auto p = pinned->find(e);
            if (p != pinned->end()) rhs -= p->second;
        }
        for (size_t f = 0; f < att.qsupp[c].size(); ++f) {
            C coef = divisors[c].coefficient(sub_expo(e, att.qsupp[c][f]));
            if (coef != 0) out.A(static_cast<int>(r), qbase[c] + static_cast<int>(f)) = -coef;
        }
        out.b[r] = std::move(rhs);
    }
    return out;
}

size_t nonzeros(const IntVec& v) {
    size_t k = 0;
    for (const auto& x : v)
        if (x != 0) ++k;
    return k;
}

bool better_solution(const IntVec& a, const IntVec& b) {
    size_t na = nonzeros(a), nb = nonzeros(b);
    if (na != nb) return na < nb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// canonical representative of the solution's x block: centered reduction
// modulo the projected kernel, then a unit-cube search around it
IntVec canonical_x(const IntegerSolution& sol, int nx) {
    IntMat proj(static_cast<int>(sol.kernel.size()), nx);
    for (size_t r = 0; r < sol.kernel.size(); ++r)
        for (int c = 0; c < nx; ++c) proj(static_cast<int>(r), c) = sol.kernel[r][static_cast<size_t>(c)];
    IntMat H = lattice_hnf(proj);
    IntVec x(sol.particular.begin(), sol.particular.begin() + nx);
    x = reduce_mod_lattice(std::move(x), H);
    int r = H.rows();
    if (r >= 1 && r <= 4) {
        IntVec best = x;
        std::vector<int> c(static_cast<size_t>(r), -1);
        while (true) {
            IntVec cand = x;
            for (int i = 0; i < r; ++i)
                if (c[static_cast<size_t>(i)] != 0)
                    for (int k = 0; k < nx; ++k) cand[static_cast<size_t>(k)] += Int(c[static_cast<size_t>(i)]) * H(i, k);
            if (better_solution(cand, best)) best = std::move(cand);
            int i = 0;
            while (i < r && c[static_cast<size_t>(i)] == 1) c[static_cast<size_t>(i++)] = -1;
            if (i == r) break;
            ++c[static_cast<size_t>(i)];
        }
        x = std::move(best);
    }
    return x;
}

struct SolveResult {
    bool solved = false;
    bool rational_possible = false;  // of the final failed attempt
    IntPoly value;
    RatPoly rational_value;
};

SolveResult solve_integral(int nvars, const std::vector<IntPoly>& values, const std::vector<IntPoly>& divisors,
                           const Attempt& att, const std::map<Expo, Int>* pinned, const LazardRing* ring) {
    auto sysm = assemble<Int>(nvars, values, divisors, att, pinned, ring);
    auto sol = solve_integer_linear(sysm.A, sysm.b);
    SolveResult out;
    if (!sol.solvable) {
        RatMat A(sysm.A.rows(), sysm.A.cols());
        RatVec b(sysm.b.size());
        for (int r = 0; r < sysm.A.rows(); ++r)
            for (int c = 0; c < sysm.A.cols(); ++c) A(r, c) = Rational(sysm.A(r, c));
        for (size_t r = 0; r < sysm.b.size(); ++r) b[r] = Rational(sysm.b[r]);
        out.rational_possible = solve_rational_linear(A, b).solvable;
        return out;
    }
    IntVec x = canonical_x(sol, static_cast<int>(sysm.free_x.size()));
    IntPoly p(nvars);
    for (size_t i = 0; i < sysm.free_x.size(); ++i)
        if (x[i] != 0) p.add_term(sysm.free_x[i], x[i]);
    if (pinned)
        for (const auto& [e, c] : *pinned)
            if (c != 0) p.add_term(e, c);
    out.solved = true;
    out.value = std::move(p);
    return out;
}

SolveResult solve_rational(int nvars, const std::vector<RatPoly>& values, const std::vector<RatPoly>& divisors,
                           const Attempt& att) {
    auto sysm = assemble<Rational>(nvars, values, divisors, att, nullptr, nullptr);
    auto sol = solve_rational_linear(sysm.A, sysm.b);
    SolveResult out;
    if (!sol.solvable) return out;
    RatPoly p(nvars);
    for (size_t i = 0; i < sysm.free_x.size(); ++i)
        if (sol.particular[i] != 0) p.add_term(sysm.free_x[i], sol.particular[i]);
    out.solved = true;
    out.rational_value = std::move(p);
    return out;
}

int64_t poly_degree(const IntPoly& p) { return p.is_zero() ? 0 : p.degree(); }

std::vector<Attempt> h_attempts(int n, int64_t dj, int cap, const std::vector<IntPoly>& values,
                                const std::vector<IntPoly>& divisors) {
    std::vector<Attempt> out;
    auto quotients = [&](int64_t xdeg) {
        std::vector<std::vector<Expo>> q;
        for (size_t c = 0; c < values.size(); ++c) {
            int64_t t = std::max(xdeg, poly_degree(values[c]));
            q.push_back(monomials_up_to(n, t - divisors[c].degree()));
        }
        return q;
    };
    out.push_back({monomials_exact(n, dj), quotients(dj)});
    int64_t top = std::max<int64_t>(dj, cap);
    for (int64_t d = dj; d <= top; ++d) out.push_back({monomials_up_to(n, d), quotients(d)});
    return out;
}

std::vector<Attempt> k_attempts(int n, int cap, const std::vector<IntPoly>& values,
                                const std::vector<IntPoly>& divisors) {
    Expo lo(static_cast<size_t>(n), 0), hi(static_cast<size_t>(n), 0);
    auto widen = [&](const IntPoly& p) {
        if (auto h = p.exponent_hull()) {
            for (int i = 0; i < n; ++i) {
                lo[static_cast<size_t>(i)] = std::min(lo[static_cast<size_t>(i)], h->first[static_cast<size_t>(i)]);
                hi[static_cast<size_t>(i)] = std::max(hi[static_cast<size_t>(i)], h->second[static_cast<size_t>(i)]);
            }
        }
    };
    for (const auto& g : divisors) widen(g);
    for (const auto& v : values) widen(v);

    std::vector<Attempt> out;
    for (int t = 0; t <= cap; ++t) {
        Attempt att;
        Expo xlo = lo, xhi = hi;
        for (int i = 0; i < n; ++i) {
            xlo[static_cast<size_t>(i)] -= t;
            xhi[static_cast<size_t>(i)] += t;
        }
        att.xsupp = box_monomials(xlo, xhi);
        for (size_t c = 0; c < values.size(); ++c) {
            Expo tlo = xlo, thi = xhi;
            if (auto h = values[c].exponent_hull())
                for (int i = 0; i < n; ++i) {
                    tlo[static_cast<size_t>(i)] = std::min(tlo[static_cast<size_t>(i)], h->first[static_cast<size_t>(i)]);
                    thi[static_cast<size_t>(i)] = std::max(thi[static_cast<size_t>(i)], h->second[static_cast<size_t>(i)]);
                }
            auto gh = divisors[c].exponent_hull();
            // the divisor's per-axis extremes come from single terms, so the
            // quotient's box is exactly the difference of the hulls
            att.qsupp.push_back(box_monomials(sub_expo(tlo, gh->first), sub_expo(thi, gh->second)));
        }
        out.push_back(std::move(att));
    }
    return out;
}

CongruenceSystem reinterpret_system(const CongruenceSystem& sys, const TheorySpec& spec) {
    CongruenceSystem out;
    out.spec = spec;
    out.labels = sys.labels;
    out.filt = sys.filt;
    out.at.resize(sys.at.size());
    out.top.reserve(sys.top.size());
    for (size_t j = 0; j < sys.at.size(); ++j) {
        Coefficient prod = spec.one();
        for (const auto& d : sys.at[j]) {
            Coefficient e = spec.euler_class(d.chi);
            prod = spec.mul(prod, e);
            out.at[j].push_back({d.s_pos, d.chi, std::move(e)});
        }
        out.top.push_back(std::move(prod));
    }
    return out;
}

struct ExtensionFail {
    BasisError error = BasisError::none;
    std::string detail;
};

// solve for the value of basis class j at stratum k against the already
// fixed values; nullopt in the outcome signals failure described in fail
std::optional<Coefficient> extend_class(const CongruenceSystem& sys, int j, int k,
                                        const std::vector<Coefficient>& fixed, const IntPoly* pin_hint,
                                        int degree_cap, ExtensionFail* fail) {
    const auto& spec = sys.spec;
    int64_t dj = sys.filt.d[static_cast<size_t>(j)];
    auto describe = [&](const char* what) {
        std::ostringstream os;
        os << "extending the class of '" << sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])]
           << "' to '" << sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(k)])] << "': " << what;
        return os.str();
    };

    if (spec.rational) {
        std::vector<RatPoly> values, divisors;
        for (const auto& d : sys.at[static_cast<size_t>(k)]) {
            values.push_back(fixed[static_cast<size_t>(sys.filt.order[static_cast<size_t>(d.s_pos)])].rat_poly());
            divisors.push_back(d.euler.rat_poly());
        }
        auto quotients = [&](int64_t xdeg) {
            std::vector<std::vector<Expo>> q;
            for (size_t c = 0; c < values.size(); ++c) {
                int64_t t = std::max(xdeg, values[c].is_zero() ? int64_t{0} : values[c].degree());
                q.push_back(monomials_up_to(spec.rank, t - divisors[c].degree()));
            }
            return q;
        };
        std::vector<Attempt> attempts;
        attempts.push_back({monomials_exact(spec.rank, dj), quotients(dj)});
        int64_t top = std::max<int64_t>(dj, degree_cap);
        for (int64_t d = dj; d <= top; ++d) attempts.push_back({monomials_up_to(spec.rank, d), quotients(d)});
        for (const auto& att : attempts) {
            auto res = solve_rational(spec.rank, values, divisors, att);
            if (res.solved) return Coefficient{std::move(res.rational_value)};
        }
        fail->error = BasisError::cap_exceeded;
        fail->detail = describe("the congruences have no rational solution within the degree cap");
        return std::nullopt;
    }

    int nvars = flat_vars(spec);
    std::vector<IntPoly> values, divisors;
    for (const auto& d : sys.at[static_cast<size_t>(k)]) {
        values.push_back(flat_of(spec, fixed[static_cast<size_t>(sys.filt.order[static_cast<size_t>(d.s_pos)])]));
        divisors.push_back(flat_of(spec, d.euler));
    }

    std::vector<Attempt> attempts;
    std::optional<LazardRing> ring;
    if (spec.theory == Theory::H) {
        attempts = h_attempts(spec.rank, dj, degree_cap, values, divisors);
    } else if (spec.theory == Theory::K) {
        attempts = k_attempts(spec.rank, degree_cap, values, divisors);
    } else {
        ring = spec.lazard();
        Attempt att{mu_support(*ring, dj), {}};
        for (size_t c = 0; c < values.size(); ++c) att.qsupp.push_back(mu_support(*ring, dj - 1));
        attempts.push_back(std::move(att));
    }

    const LazardRing* ringp = ring ? &*ring : nullptr;
    std::map<Expo, Int> pinned;
    bool use_pin = false;
    if (spec.theory == Theory::MU && pin_hint && !attempts.empty()) {
        // fix the a-free block to the polynomial companion so that setting
        // every a to zero lands exactly on the H basis
        const IntPoly& h = *pin_hint;
        if (h == h.homogeneous_part(dj)) {
            use_pin = true;
            for (const auto& e : attempts.front().xsupp) {
                bool pure = true;
                for (size_t i = static_cast<size_t>(spec.rank); i < e.size(); ++i)
                    if (e[i] != 0) pure = false;
                if (!pure) continue;
                Expo y(e.begin(), e.begin() + spec.rank);
                pinned[e] = h.coefficient(y);
            }
        }
    }

    bool rational_possible = false;
    if (use_pin) {
        auto res = solve_integral(nvars, values, divisors, attempts.front(), &pinned, ringp);
        if (res.solved) return lift_flat(spec, std::move(res.value));
    }
    for (const auto& att : attempts) {
        auto res = solve_integral(nvars, values, divisors, att, nullptr, ringp);
        if (res.solved) return lift_flat(spec, std::move(res.value));
        rational_possible = res.rational_possible;
    }

    if (rational_possible) {
        fail->error = BasisError::no_integral_extension;
        fail->detail = describe("the congruences admit a rational solution but no integral one within the support cap");
    } else {
        fail->error = BasisError::cap_exceeded;
        fail->detail = describe("no solution exists within the support cap");
    }
    return std::nullopt;
}

void check_class_shape(const CongruenceSystem& sys, const CohomologyClass& x) {
    if (!(x.spec == sys.spec)) throw input_error("the class does not match the system's theory");
    if (static_cast<int>(x.values.size()) != sys.nverts())
        throw input_error("the class has the wrong number of vertex values");
    for (const auto& v : x.values) sys.spec.check(v);
}

void require_integral_h(const CongruenceSystem& sys, const char* what) {
    if (sys.spec.theory != Theory::H || sys.spec.rational)
        throw input_error(std::string(what) + " is defined for the integral polynomial carrier only");
}

}  // namespace

CohomologyClass constant_class(const TheorySpec& spec, const Coefficient& c, int nverts) {
    spec.check(c);
    if (nverts <= 0) throw input_error("a class needs at least one vertex");
    return {spec, std::vector<Coefficient>(static_cast<size_t>(nverts), c)};
}

CohomologyClass add_classes(const CohomologyClass& a, const CohomologyClass& b) {
    if (!(a.spec == b.spec) || a.values.size() != b.values.size())
        throw input_error("classes live in different rings");
    CohomologyClass out{a.spec, {}};
    out.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.spec.add(a.values[i], b.values[i]));
    return out;
}

CohomologyClass sub_classes(const CohomologyClass& a, const CohomologyClass& b) {
    if (!(a.spec == b.spec) || a.values.size() != b.values.size())
        throw input_error("classes live in different rings");
    CohomologyClass out{a.spec, {}};
    out.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.spec.sub(a.values[i], b.values[i]));
    return out;
}

CohomologyClass mul_classes(const CohomologyClass& a, const CohomologyClass& b) {
    if (!(a.spec == b.spec) || a.values.size() != b.values.size())
        throw input_error("classes live in different rings");
    CohomologyClass out{a.spec, {}};
    out.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.spec.mul(a.values[i], b.values[i]));
    return out;
}

CohomologyClass scale_class(const CohomologyClass& a, const Coefficient& p) {
    a.spec.check(p);
    CohomologyClass out{a.spec, {}};
    out.values.reserve(a.values.size());
    for (const auto& v : a.values) out.values.push_back(a.spec.mul(v, p));
    return out;
}

SystemOutcome build_system(const GKMComplex& gc, const Filtration& filt, const TheorySpec& spec) {
    SystemOutcome out;
    if (!spec.rational) {
        auto dc = check_divisive(gc, filt);
        if (!dc.divisive) {
            out.error = SystemError::not_divisive;
            out.detail = dc.witness;
            return out;
        }
    }
    auto data = downward_euler_data(gc, filt, spec);
    out.sys.spec = spec;
    out.sys.labels = gc.complex.labels;
    out.sys.filt = filt;
    out.sys.top = std::move(data.total);
    out.sys.at.resize(data.at.size());
    for (size_t j = 0; j < data.at.size(); ++j) {
        for (auto& d : data.at[j]) {
            if (spec.is_zero(d.euler))
                throw input_error("zero divisor on the edge into '" +
                                  gc.complex.labels[static_cast<size_t>(d.s_vertex)] + "'");
            out.sys.at[j].push_back({d.s_pos, std::move(d.chi), std::move(d.euler)});
        }
        const auto& divs = out.sys.at[j];
        for (size_t a = 0; a < divs.size(); ++a)
            for (size_t b = a + 1; b < divs.size(); ++b)
                if (is_parallel(divs[a].chi, divs[b].chi)) {
                    out.error = SystemError::coprimality;
                    std::ostringstream os;
                    os << "the divisors at '"
                       << gc.complex.labels[static_cast<size_t>(filt.order[j])] << "' toward '"
                       << gc.complex.labels[static_cast<size_t>(filt.order[static_cast<size_t>(divs[a].s_pos)])]
                       << "' and '"
                       << gc.complex.labels[static_cast<size_t>(filt.order[static_cast<size_t>(divs[b].s_pos)])]
                       << "' share a factor";
                    out.detail = os.str();
                    return out;
                }
    }
    return out;
}

MemberCheck is_member(const CongruenceSystem& sys, const CohomologyClass& x) {
    check_class_shape(sys, x);
    for (size_t j = 1; j < sys.at.size(); ++j) {
        const auto& xj = x.values[static_cast<size_t>(sys.filt.order[j])];
        for (const auto& d : sys.at[j]) {
            const auto& xs = x.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(d.s_pos)])];
            Coefficient diff = sys.spec.sub(xj, xs);
            if (sys.spec.is_zero(diff)) continue;
            auto div = sys.spec.exact_div(diff, d.euler);
            if (!div.ok) return {false, static_cast<int>(j), d.s_pos, div.witness};
        }
    }
    return {};
}

BasisOutcome compute_basis(const CongruenceSystem& sys, int degree_cap) {
    if (degree_cap < 0) throw input_error("the degree cap must be nonnegative");
    const auto& spec = sys.spec;
    int m = sys.strata();

    std::vector<BasisClass> companion;
    if (spec.theory == Theory::MU) {
        auto h_sys = reinterpret_system(sys, TheorySpec::make(Theory::H, spec.rank));
        auto h_out = compute_basis(h_sys, degree_cap);
        if (h_out.ok()) companion = std::move(h_out.classes);
    }

    BasisOutcome out;
    for (int j = 0; j < m; ++j) {
        if (spec.theory == Theory::MU && spec.is_zero(sys.top[static_cast<size_t>(j)]))
            throw input_error("the series window is too small to carry the class of '" +
                              sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])] +
                              "'; raise the truncation");
        CohomologyClass phi{spec, std::vector<Coefficient>(static_cast<size_t>(sys.nverts()), spec.zero())};
        phi.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])] = sys.top[static_cast<size_t>(j)];
        for (int k = j + 1; k < m; ++k) {
            const IntPoly* hint = nullptr;
            IntPoly hint_poly;
            if (!companion.empty()) {
                hint_poly = companion[static_cast<size_t>(j)]
                                .cls.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(k)])]
                                .int_poly();
                hint = &hint_poly;
            }
            ExtensionFail fail;
            auto value = extend_class(sys, j, k, phi.values, hint, degree_cap, &fail);
            if (!value) {
                out.error = fail.error;
                out.detail = std::move(fail.detail);
                out.classes.clear();
                return out;
            }
            phi.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(k)])] = std::move(*value);
        }
        auto chk = is_member(sys, phi);
        if (!chk.member)
            throw internal_error("a constructed basis class fails its own congruences: " + chk.witness);
        out.classes.push_back({j, std::move(phi)});
    }
    return out;
}

Decomposition decompose(const CongruenceSystem& sys, const std::vector<BasisClass>& basis,
                        const CohomologyClass& x) {
    check_class_shape(sys, x);
    if (static_cast<int>(basis.size()) != sys.strata()) throw input_error("the basis does not fit the system");
    for (size_t j = 0; j < basis.size(); ++j)
        if (basis[j].j != static_cast<int>(j) || static_cast<int>(basis[j].cls.values.size()) != sys.nverts())
            throw input_error("the basis does not fit the system");

    Decomposition out;
    auto chk = is_member(sys, x);
    if (!chk.member) {
        out.error = DecomposeError::not_a_member;
        std::ostringstream os;
        os << "the class is not a member: the congruence between '"
           << sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(chk.j)])] << "' and '"
           << sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(chk.s)])]
           << "' fails with remainder " << chk.witness;
        out.detail = os.str();
        return out;
    }

    const auto& spec = sys.spec;
    std::vector<Coefficient> residue = x.values;
    for (int j = 0; j < sys.strata(); ++j) {
        const auto& r = residue[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])];
        Coefficient p = spec.zero();
        if (!spec.is_zero(r)) {
            if (j == 0) {
                p = r;  // the empty Euler product is one
            } else {
                auto div = spec.exact_div(r, sys.top[static_cast<size_t>(j)]);
                if (!div.ok) {
                    out.error = DecomposeError::not_in_span;
                    std::ostringstream os;
                    os << "the value at '" << sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])]
                       << "' is not a multiple of the stratum class: " << div.witness;
                    out.detail = os.str();
                    return out;
                }
                p = std::move(div.quotient);
            }
        }
        if (!spec.is_zero(p))
            for (int v = 0; v < sys.nverts(); ++v)
                residue[static_cast<size_t>(v)] = spec.sub(
                    residue[static_cast<size_t>(v)],
                    spec.mul(p, basis[static_cast<size_t>(j)].cls.values[static_cast<size_t>(v)]));
        out.coeffs.push_back(std::move(p));
    }
    for (const auto& r : residue)
        if (!spec.is_zero(r)) throw internal_error("decomposition left a nonzero residue");
    return out;
}

IntMat member_lattice(const CongruenceSystem& sys, int degree) {
    require_integral_h(sys, "the member lattice");
    if (degree < 0) throw input_error("the degree must be nonnegative");
    int n = sys.spec.rank;
    int m = sys.strata();
    auto mons = monomials_exact(n, degree);
    std::map<Expo, int> mcol;
    for (size_t i = 0; i < mons.size(); ++i) mcol[mons[i]] = static_cast<int>(i);
    int xw = static_cast<int>(mons.size());

    std::vector<std::vector<Expo>> qsupp;
    std::vector<std::pair<int, const Divisor*>> congs;  // (position j, divisor)
    for (int j = 1; j < m; ++j)
        for (const auto& d : sys.at[static_cast<size_t>(j)]) {
            congs.emplace_back(j, &d);
            qsupp.push_back(monomials_exact(n, degree - d.euler.int_poly().degree()));
        }

    int cols = m * xw;
    std::vector<int> qbase(congs.size());
    for (size_t c = 0; c < congs.size(); ++c) {
        qbase[c] = cols;
        cols += static_cast<int>(qsupp[c].size());
    }

    IntMat A(static_cast<int>(congs.size()) * xw, cols);
    for (size_t c = 0; c < congs.size(); ++c) {
        int j = congs[c].first;
        int s = congs[c].second->s_pos;
        const IntPoly& g = congs[c].second->euler.int_poly();
        for (int e = 0; e < xw; ++e) {
            int row = static_cast<int>(c) * xw + e;
            A(row, j * xw + e) = 1;
            A(row, s * xw + e) = -1;
            for (size_t f = 0; f < qsupp[c].size(); ++f) {
                Int coef = g.coefficient(sub_expo(mons[static_cast<size_t>(e)], qsupp[c][f]));
                if (coef != 0) A(row, qbase[c] + static_cast<int>(f)) = -coef;
            }
        }
    }

    auto sol = solve_integer_linear(A, IntVec(static_cast<size_t>(A.rows()), Int(0)));
    IntMat proj(static_cast<int>(sol.kernel.size()), m * xw);
    for (size_t r = 0; r < sol.kernel.size(); ++r)
        for (int ccol = 0; ccol < m * xw; ++ccol)
            proj(static_cast<int>(r), ccol) = sol.kernel[r][static_cast<size_t>(ccol)];
    return lattice_hnf(proj);
}

IntMat basis_degree_lattice(const CongruenceSystem& sys, const std::vector<BasisClass>& basis, int degree) {
    require_integral_h(sys, "the basis degree slice");
    if (static_cast<int>(basis.size()) != sys.strata()) throw input_error("the basis does not fit the system");
    int n = sys.spec.rank;
    int m = sys.strata();
    auto mons = monomials_exact(n, degree);
    std::map<Expo, int> mcol;
    for (size_t i = 0; i < mons.size(); ++i) mcol[mons[i]] = static_cast<int>(i);
    int xw = static_cast<int>(mons.size());

    std::vector<IntVec> rows;
    for (int j = 0; j < m; ++j) {
        int64_t dj = sys.filt.d[static_cast<size_t>(j)];
        for (int k = 0; k < m; ++k) {
            const IntPoly& v = basis[static_cast<size_t>(j)]
                                   .cls.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(k)])]
                                   .int_poly();
            if (!(v == v.homogeneous_part(dj)))
                throw input_error("the basis is not graded; the degree slice needs homogeneous values");
        }
        for (const auto& mu : monomials_exact(n, degree - dj)) {
            IntVec row(static_cast<size_t>(m) * static_cast<size_t>(xw), Int(0));
            for (int k = 0; k < m; ++k) {
                const IntPoly& v = basis[static_cast<size_t>(j)]
                                       .cls.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(k)])]
                                       .int_poly();
                for (const auto& [e, c] : v.terms())
                    row[static_cast<size_t>(k * xw + mcol.at(add_expo(e, mu)))] = c;
            }
            rows.push_back(std::move(row));
        }
    }

    IntMat stacked(static_cast<int>(rows.size()), m * xw);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int ccol = 0; ccol < m * xw; ++ccol) stacked(static_cast<int>(r), ccol) = rows[r][static_cast<size_t>(ccol)];
    return lattice_hnf(stacked);
}

std::vector<int> graded_rank(const CongruenceSystem& sys, const std::vector<BasisClass>& basis,
                             int up_to_degree) {
    require_integral_h(sys, "the graded rank");
    if (up_to_degree < 0) throw input_error("the degree bound must be nonnegative");
    if (static_cast<int>(basis.size()) != sys.strata()) throw input_error("the basis does not fit the system");
    for (int j = 0; j < sys.strata(); ++j) {
        const auto& v = basis[static_cast<size_t>(j)]
                            .cls.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])]
                            .int_poly();
        if (v.degree() != sys.filt.d[static_cast<size_t>(j)])
            throw input_error("the basis degrees do not match the filtration");
    }

    std::vector<int> out;
    for (int d = 0; d <= up_to_degree; ++d) {
        int formula = 0;
        for (int j = 0; j < sys.strata(); ++j)
            formula += static_cast<int>(monomials_exact(sys.spec.rank, d - sys.filt.d[static_cast<size_t>(j)]).size());
        int direct = member_lattice(sys, d).rows();
        if (formula != direct) {
            std::ostringstream os;
            os << "graded rank mismatch at degree " << d << ": counting gives " << formula
               << " but the member lattice has rank " << direct;
            throw internal_error(os.str());
        }
        out.push_back(formula);
    }
    return out;
}

}  // namespace gkm
