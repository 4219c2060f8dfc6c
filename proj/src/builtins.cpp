#include "gkm/builtins.hpp"

#include <cctype>
#include <set>
#include <string>

#include "gkm/errors.hpp"

namespace gkm {

GKMComplex make_weighted_gkm(const WeightedProjectiveSpec& spec, const GraphComplex& complex) {
    size_t n = complex.labels.size();
    if (spec.weights.size() != n) throw input_error("one weight per vertex required");
    if (spec.characters.size() != n) throw input_error("one character per vertex required");
    if (spec.rank < 1) throw input_error("torus rank must be positive");
    for (const Int& c : spec.weights)
        if (c.is_zero()) throw input_error("vertex weights must be nonzero");
    for (const auto& chi : spec.characters)
        if (static_cast<int>(chi.size()) != spec.rank) throw input_error("character length does not match the rank");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (spec.characters[i] == spec.characters[j])
                throw input_error("vertex characters must be pairwise distinct");

    std::map<OEdge, RatVec> alpha;
    std::map<OEdge, Int> weight;
    auto fill_edge = [&](int i, int j) {
        const auto& yi = spec.characters[static_cast<size_t>(i)];
        const auto& yj = spec.characters[static_cast<size_t>(j)];
        Rational ratio = Rational(spec.weights[static_cast<size_t>(j)]) / Rational(spec.weights[static_cast<size_t>(i)]);
        RatVec a(static_cast<size_t>(spec.rank));
        for (size_t t = 0; t < a.size(); ++t) a[t] = Rational{yj[t]} - ratio * Rational{yi[t]};
        alpha[{i, j}] = std::move(a);
        weight[{i, j}] = abs(spec.weights[static_cast<size_t>(i)]);
    };

    Graph total = complex.total();
    for (const auto& [a, b] : total.edges) {
        fill_edge(a, b);
        fill_edge(b, a);
    }

    std::map<std::pair<OEdge, OEdge>, OEdge> theta;
    for (const auto& m : complex.members)
        for (const auto& [a, b] : m.edges)
            for (OEdge e : {OEdge{a, b}, OEdge{b, a}}) {
                for (const auto& [p, q] : m.edges) {
                    int other = -1;
                    if (p == e.first) other = q;
                    if (q == e.first) other = p;
                    if (other < 0) continue;
                    OEdge ep{e.first, other};
                    OEdge image = other == e.second ? reversed(e) : OEdge{e.second, other};
                    if (other != e.second && !m.contains_edge(other < e.second ? std::pair{other, e.second}
                                                                               : std::pair{e.second, other}))
                        throw input_error("member '" + m.name + "' does not close under the endpoint shift");
                    theta[{e, ep}] = image;
                }
            }

    return make_gkm_complex(complex, spec.rank, std::move(alpha), std::move(weight), std::move(theta));
}

GKMComplex make_fig3_complex(const Int& c0, const Int& c1, const Int& c2, const Int& c3) {
    WeightedProjectiveSpec spec;
    spec.rank = 4;
    spec.weights = {c0, c1, c2, c3};
    spec.characters = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    auto complex = make_complex(
        {"v0", "v1", "v2", "v3"},
        {{"O1", {"v0", "v1", "v2"}, {{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}}},
         {"O2", {"v0", "v1", "v3"}, {{"v0", "v1"}, {"v0", "v3"}, {"v1", "v3"}}},
         {"O3", {"v0", "v1"}, {{"v0", "v1"}}}});
    return make_weighted_gkm(spec, complex);
}

GKMComplex make_weighted_projective_line(const Int& q0, const Int& q1) {
    if (q0 <= 0 || q1 <= 0) throw input_error("spindle weights must be positive");
    WeightedProjectiveSpec spec;
    spec.rank = 1;
    spec.weights = {q0, q1};
    spec.characters = {{Int{0}}, {Int{1}}};
    auto complex = make_complex({"v0", "v1"}, {{"edge", {"v0", "v1"}, {{"v0", "v1"}}}});
    return make_weighted_gkm(spec, complex);
}

GKMComplex make_complete_gkm(int n_plus_1) {
    if (n_plus_1 < 2) throw input_error("a complete complex needs at least two vertices");
    WeightedProjectiveSpec spec;
    spec.rank = n_plus_1;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n_plus_1; ++i) {
        labels.push_back("v" + std::to_string(i + 1));
        spec.weights.push_back(1);
        std::vector<Int> chi(static_cast<size_t>(n_plus_1), Int{0});
        chi[static_cast<size_t>(i)] = 1;
        spec.characters.push_back(std::move(chi));
    }
    for (int i = 0; i < n_plus_1; ++i)
        for (int j = i + 1; j < n_plus_1; ++j) edges.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);
    MemberSpec member{"total", labels, edges};
    return make_weighted_gkm(spec, make_complex(labels, {member}));
}

std::optional<GKMComplex> builtin_complex(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos || open == 0 || text.back() != ')') return std::nullopt;
    std::string name = text.substr(0, open);
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;

    std::vector<Int> args;
    std::string body = text.substr(open + 1, text.size() - open - 2);
    size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        size_t comma = body.find(',', pos);
        std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            args.emplace_back(piece);
        } catch (const std::exception&) {
            throw input_error("builtin argument '" + piece + "' is not an integer");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    auto arity = [&](size_t want) {
        if (args.size() != want)
            throw input_error("builtin '" + name + "' takes " + std::to_string(want) +
                              " argument(s), got " + std::to_string(args.size()));
    };
    if (name == "complete") {
        arity(1);
        if (args[0] < 2 || args[0] > 1000) throw input_error("complete(m) needs 2 <= m <= 1000");
        return make_complete_gkm(args[0].convert_to<int>());
    }
    if (name == "fig3") {
        arity(4);
        return make_fig3_complex(args[0], args[1], args[2], args[3]);
    }
    if (name == "wpl") {
        arity(2);
        return make_weighted_projective_line(args[0], args[1]);
    }
    throw input_error("unknown builtin '" + name +
                      "'; available: complete(m), fig3(c0,c1,c2,c3), wpl(q0,q1)");
}

}  // namespace gkm
