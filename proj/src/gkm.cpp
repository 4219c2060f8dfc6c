#include "gkm/gkm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

std::string vec_text(const RatVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// the scalar t with b = t*a, when one exists
std::optional<Rational> parallel_ratio(const RatVec& a, const RatVec& b) {
    size_t lead = a.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == a.size()) return std::nullopt;  // a = 0
    Rational t = b[lead] / a[lead];
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != t * a[i]) return std::nullopt;
    return t;
}

// oriented edges leaving v inside the member, sorted by target
std::vector<OEdge> edges_at(const Member& m, int v) {
    std::vector<OEdge> out;
    for (const auto& [a, b] : m.edges) {
        if (a == v) out.push_back({a, b});
        if (b == v) out.push_back({b, a});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const RatVec& GKMComplex::alpha_of(const OEdge& e) const {
    auto it = alpha.find(e);
    if (it == alpha.end()) throw internal_error("alpha missing on " + edge_text(e));
    return it->second;
}

const Int& GKMComplex::weight_of(const OEdge& e) const {
    auto it = weight.find(e);
    if (it == weight.end()) throw internal_error("weight missing on " + edge_text(e));
    return it->second;
}

std::string GKMComplex::edge_text(const OEdge& e) const {
    return total.labels[static_cast<size_t>(e.first)] + " -> " + total.labels[static_cast<size_t>(e.second)];
}

GKMComplex make_gkm_complex(GraphComplex complex, int rank, std::map<OEdge, RatVec> alpha,
                            std::map<OEdge, Int> weight, std::map<std::pair<OEdge, OEdge>, OEdge> theta) {
    if (rank < 1) throw input_error("torus rank must be positive");
    GKMComplex gc;
    gc.complex = std::move(complex);
    gc.total = gc.complex.total();
    gc.rank = rank;
    gc.alpha = std::move(alpha);
    gc.weight = std::move(weight);
    gc.theta = std::move(theta);

    auto check_oriented = [&](const OEdge& e) {
        if (!gc.total.has_edge(e.first, e.second))
            throw input_error("data attached to a non-edge " + gc.edge_text(e));
    };
    for (const auto& [a, b] : gc.total.edges) {
        for (OEdge e : {OEdge{a, b}, OEdge{b, a}}) {
            auto it = gc.alpha.find(e);
            if (it == gc.alpha.end()) throw input_error("alpha missing on " + gc.edge_text(e));
            if (static_cast<int>(it->second.size()) != rank)
                throw input_error("alpha on " + gc.edge_text(e) + " has the wrong length");
            auto wt = gc.weight.find(e);
            if (wt == gc.weight.end()) throw input_error("weight missing on " + gc.edge_text(e));
            if (wt->second <= 0) throw input_error("weight on " + gc.edge_text(e) + " must be positive");
        }
    }
    for (const auto& [e, v] : gc.alpha) {
        (void)v;
        check_oriented(e);
    }
    for (const auto& [e, w] : gc.weight) {
        (void)w;
        check_oriented(e);
    }
    for (const auto& [key, value] : gc.theta) {
        check_oriented(key.first);
        check_oriented(key.second);
        check_oriented(value);
    }
    return gc;
}

Int rtilde(const GKMComplex& gc, const OEdge& e) {
    Int r = 1;
    for (const Rational& x : gc.alpha_of(e)) r = lcm(r, denominator(x));
    return r;
}

std::vector<Int> integral_character(const GKMComplex& gc, const OEdge& e) {
    Int r = rtilde(gc, e);
    std::vector<Int> chi;
    for (const Rational& x : gc.alpha_of(e)) {
        Rational scaled = x * Rational{r};
        if (!is_integer(scaled)) throw internal_error("character scaling failed on " + gc.edge_text(e));
        chi.push_back(numerator(scaled));
    }
    return chi;
}

AxialReport validate_axial(const GKMComplex& gc) {
    AxialReport report;
    auto flag = [&](std::string msg) {
        report.ok = false;
        report.issues.push_back(std::move(msg));
    };

    for (const auto& [a, b] : gc.total.edges) {
        OEdge e{a, b};
        OEdge eb{b, a};
        const RatVec& va = gc.alpha_of(e);
        const RatVec& vb = gc.alpha_of(eb);
        if (is_zero_vec(va)) flag("alpha vanishes on " + gc.edge_text(e));
        if (is_zero_vec(vb)) flag("alpha vanishes on " + gc.edge_text(eb));

        RatVec se(va), sb(vb);
        bool integral = true;
        for (size_t i = 0; i < se.size(); ++i) {
            se[i] *= Rational{gc.weight_of(e)};
            sb[i] *= Rational{gc.weight_of(eb)};
            if (!is_integer(se[i])) {
                flag("r * alpha is not integral on " + gc.edge_text(e));
                integral = false;
                break;
            }
            if (!is_integer(sb[i])) {
                flag("r * alpha is not integral on " + gc.edge_text(eb));
                integral = false;
                break;
            }
        }
        if (integral) {
            bool plus = se == sb;
            bool minus = true;
            for (size_t i = 0; i < se.size(); ++i)
                if (se[i] != -sb[i]) {
                    minus = false;
                    break;
                }
            if (!plus && !minus)
                flag("r * alpha disagrees between the orientations of " + gc.edge_text(e) + ": " +
                     vec_text(se) + " vs " + vec_text(sb));
        }
    }

    for (const auto& m : gc.complex.members) {
        for (int v : m.vertices) {
            auto around = edges_at(m, v);
            for (size_t i = 0; i < around.size(); ++i)
                for (size_t j = i + 1; j < around.size(); ++j) {
                    const RatVec& x = gc.alpha_of(around[i]);
                    const RatVec& y = gc.alpha_of(around[j]);
                    if (is_zero_vec(x) || is_zero_vec(y)) continue;  // already flagged
                    if (parallel_ratio(x, y))
                        flag("alpha on " + gc.edge_text(around[i]) + " and " + gc.edge_text(around[j]) +
                             " are parallel at '" + gc.total.labels[static_cast<size_t>(v)] +
                             "' in member '" + m.name + "'");
                }
        }
    }
    return report;
}

ConnectionReport validate_connection(const GKMComplex& gc) {
    ConnectionReport report;
    auto flag = [&](std::string msg) {
        report.ok = false;
        report.issues.push_back(std::move(msg));
    };
    std::set<std::pair<OEdge, OEdge>> congruent;

    for (const auto& m : gc.complex.members) {
        for (const auto& [a, b] : m.edges) {
            for (OEdge e : {OEdge{a, b}, OEdge{b, a}}) {
                auto source = edges_at(m, e.first);
                auto target = edges_at(m, e.second);
                std::set<OEdge> images;
                bool clean = true;
                for (const OEdge& ep : source) {
                    auto it = gc.theta.find({e, ep});
                    if (it == gc.theta.end()) {
                        clean = false;
                        flag("theta undefined at (" + gc.edge_text(e) + "; " + gc.edge_text(ep) +
                             ") in member '" + m.name + "'");
                        continue;
                    }
                    const OEdge& img = it->second;
                    if (!std::binary_search(target.begin(), target.end(), img)) {
                        clean = false;
                        flag("theta at (" + gc.edge_text(e) + "; " + gc.edge_text(ep) + ") leaves member '" +
                             m.name + "'");
                        continue;
                    }
                    if (!images.insert(img).second) {
                        clean = false;
                        flag("theta along " + gc.edge_text(e) + " repeats the image " + gc.edge_text(img) +
                             " in member '" + m.name + "'");
                    }
                    if (ep == e && img != reversed(e))
                        flag("theta along " + gc.edge_text(e) + " does not map the edge to its reverse");
                    auto back = gc.theta.find({reversed(e), img});
                    if (back != gc.theta.end() && back->second != ep)
                        flag("theta along " + gc.edge_text(reversed(e)) + " does not invert theta along " +
                             gc.edge_text(e) + " at " + gc.edge_text(ep));

                    // congruence for this pair (member independent)
                    if (!congruent.insert({e, ep}).second) continue;
                    const RatVec& base = gc.alpha_of(e);
                    RatVec delta = gc.alpha_of(img);
                    const RatVec& from = gc.alpha_of(ep);
                    for (size_t i = 0; i < delta.size(); ++i) delta[i] -= from[i];
                    Int c = 1;
                    if (!is_zero_vec(delta)) {
                        auto t = parallel_ratio(base, delta);
                        if (!t) {
                            flag("alpha(theta(e')) - alpha(e') is not parallel to alpha(e) at (" +
                                 gc.edge_text(e) + "; " + gc.edge_text(ep) + ")");
                            continue;
                        }
                        Int modulus = denominator(*t) * gc.weight_of(e);
                        c = modulus / gcd(abs(numerator(*t)), modulus);
                    }
                    report.witnesses.push_back({e, ep, c});
                }
                if (clean && images.size() != target.size())
                    flag("theta along " + gc.edge_text(e) + " is not a bijection onto the edges at '" +
                         gc.total.labels[static_cast<size_t>(e.second)] + "' in member '" + m.name + "'");
            }
        }
    }
    return report;
}

DivisiveCheck check_divisive(const GKMComplex& gc, const Filtration& filt) {
    DivisiveCheck out;
    for (size_t j = 1; j < filt.added.size(); ++j)
        for (const auto& [down, fresh] : filt.added[j]) {
            OEdge e{fresh, down};
            Int r = rtilde(gc, e);
            if (r != 1) {
                out.divisive = false;
                std::ostringstream os;
                os << "downward direction on " << gc.edge_text(e) << " is not integral: alpha = "
                   << vec_text(gc.alpha_of(e)) << " (scale " << to_string(r) << ")";
                out.witness = os.str();
                return out;
            }
        }
    return out;
}

DownwardData downward_euler_data(const GKMComplex& gc, const Filtration& filt, const TheorySpec& spec) {
    if (spec.rank != gc.rank) throw internal_error("theory rank does not match the complex");
    DownwardData data;
    data.spec = spec;
    data.at.resize(filt.added.size());
    for (size_t j = 0; j < filt.added.size(); ++j) {
        Coefficient product = spec.one();
        for (const auto& [down, fresh] : filt.added[j]) {
            DownwardEdge de;
            de.s_vertex = down;
            de.s_pos = filt.position[static_cast<size_t>(down)];
            de.chi = integral_character(gc, OEdge{fresh, down});
            de.euler = spec.euler_class(de.chi);
            product = spec.mul(product, de.euler);
            data.at[j].push_back(std::move(de));
        }
        data.total.push_back(std::move(product));
    }
    return data;
}

}  // namespace gkm
