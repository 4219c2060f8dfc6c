#include "gkm/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gkm/numeric.hpp"

namespace gkm {

namespace {

using nlohmann::json;

const char* kFields[] = {"torus_rank", "vertices", "members", "axial", "connection", "metadata"};

std::string trimmed(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
}

std::pair<std::string, std::string> split_arrow(const std::string& key, const std::string& origin,
                                                const std::string& loc) {
    auto pos = key.find("->");
    if (pos == std::string::npos)
        throw schema_error(origin, loc, "key '" + key + "' is not of the form 'src->tgt'");
    std::string a = trimmed(key.substr(0, pos));
    std::string b = trimmed(key.substr(pos + 2));
    if (a.empty() || b.empty())
        throw schema_error(origin, loc, "key '" + key + "' is not of the form 'src->tgt'");
    return {a, b};
}

const json& field(const json& j, const char* name, const std::string& origin) {
    auto it = j.find(name);
    if (it == j.end()) throw schema_error(origin, name, "missing required field");
    return *it;
}

std::string str_at(const json& j, const std::string& origin, const std::string& loc) {
    if (!j.is_string() || j.get<std::string>().empty())
        throw schema_error(origin, loc, "expected a nonempty string");
    return j.get<std::string>();
}

Int int_at(const json& j, const std::string& origin, const std::string& loc) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw schema_error(origin, loc, "'" + j.get<std::string>() + "' is not an integer");
        }
    }
    throw schema_error(origin, loc, "expected an integer (number or decimal string)");
}

Rational rational_at(const json& j, const std::string& origin, const std::string& loc) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw schema_error(origin, loc, "'" + j.get<std::string>() + "' is not a fraction 'p/q'");
        }
    }
    throw schema_error(origin, loc, "expected a fraction string");
}

json weight_json(const Int& w) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (w >= lo && w <= hi) return json(w.convert_to<long long>());
    return json(to_string(w));
}

std::string escape_dot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

GKMComplex parse_document_text(const std::string& text, const std::string& origin,
                               std::vector<std::string>* notes) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error(origin, "byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) throw schema_error(origin, "$", "top level must be an object");
    for (const auto& item : doc.items()) {
        bool known = false;
        for (const char* f : kFields) known = known || item.key() == f;
        if (!known) throw schema_error(origin, item.key(), "unknown field");
    }

    const json& jrank = field(doc, "torus_rank", origin);
    if (!jrank.is_number_integer() || jrank.get<long long>() <= 0)
        throw schema_error(origin, "torus_rank", "expected a positive integer");
    const int rank = jrank.get<int>();

    const json& jverts = field(doc, "vertices", origin);
    if (!jverts.is_array() || jverts.empty())
        throw schema_error(origin, "vertices", "expected a nonempty array of labels");
    std::vector<std::string> labels;
    std::set<std::string> declared;
    for (size_t i = 0; i < jverts.size(); ++i) {
        std::string v = str_at(jverts[i], origin, "vertices[" + std::to_string(i) + "]");
        if (!declared.insert(v).second)
            throw schema_error(origin, "vertices[" + std::to_string(i) + "]",
                               "duplicate vertex '" + v + "'");
        labels.push_back(std::move(v));
    }

    const json& jmembers = field(doc, "members", origin);
    if (!jmembers.is_array() || jmembers.empty())
        throw schema_error(origin, "members", "expected a nonempty array");
    std::vector<MemberSpec> members;
    for (size_t i = 0; i < jmembers.size(); ++i) {
        const std::string loc = "members[" + std::to_string(i) + "]";
        const json& jm = jmembers[i];
        if (!jm.is_object()) throw schema_error(origin, loc, "expected an object");
        MemberSpec spec;
        if (jm.contains("name")) spec.name = str_at(jm["name"], origin, loc + ".name");
        const json& mv = field(jm, "vertices", origin);
        if (!mv.is_array()) throw schema_error(origin, loc + ".vertices", "expected an array");
        std::set<std::string> here;
        for (size_t k = 0; k < mv.size(); ++k) {
            std::string v = str_at(mv[k], origin, loc + ".vertices[" + std::to_string(k) + "]");
            if (!declared.count(v))
                throw schema_error(origin, loc + ".vertices[" + std::to_string(k) + "]",
                                   "undeclared vertex '" + v + "'");
            here.insert(v);
            spec.vertices.push_back(std::move(v));
        }
        const json& me = field(jm, "edges", origin);
        if (!me.is_array()) throw schema_error(origin, loc + ".edges", "expected an array");
        for (size_t k = 0; k < me.size(); ++k) {
            const std::string eloc = loc + ".edges[" + std::to_string(k) + "]";
            const json& je = me[k];
            if (!je.is_array() || je.size() != 2)
                throw schema_error(origin, eloc, "expected a pair [src, tgt]");
            std::string a = str_at(je[0], origin, eloc);
            std::string b = str_at(je[1], origin, eloc);
            for (const std::string& v : {a, b})
                if (!here.count(v))
                    throw schema_error(origin, eloc, "'" + v + "' is not a vertex of this member");
            spec.edges.emplace_back(std::move(a), std::move(b));
        }
        members.push_back(std::move(spec));
    }
    GraphComplex complex = make_complex(labels, members);
    Graph total = complex.total();

    const json& jaxial = field(doc, "axial", origin);
    if (!jaxial.is_object()) throw schema_error(origin, "axial", "expected an object");
    std::map<OEdge, RatVec> alpha;
    std::map<OEdge, Int> weight;
    for (const auto& item : jaxial.items()) {
        const std::string loc = "axial[\"" + item.key() + "\"]";
        auto [sa, sb] = split_arrow(item.key(), origin, loc);
        for (const std::string& v : {sa, sb})
            if (!declared.count(v)) throw schema_error(origin, loc, "undeclared vertex '" + v + "'");
        OEdge e{total.vertex(sa), total.vertex(sb)};
        if (!total.has_edge(e.first, e.second))
            throw schema_error(origin, loc, "'" + sa + "'--'" + sb + "' is not an edge");
        const json& jv = item.value();
        if (!jv.is_object()) throw schema_error(origin, loc, "expected an object");
        const json& ja = field(jv, "alpha", origin);
        if (!ja.is_array() || static_cast<int>(ja.size()) != rank)
            throw schema_error(origin, loc + ".alpha",
                               "expected " + std::to_string(rank) + " components");
        RatVec vec;
        for (size_t k = 0; k < ja.size(); ++k)
            vec.push_back(rational_at(ja[k], origin, loc + ".alpha[" + std::to_string(k) + "]"));
        Int r = int_at(field(jv, "r", origin), origin, loc + ".r");
        if (r <= 0) throw schema_error(origin, loc + ".r", "weight must be positive");
        alpha[e] = std::move(vec);
        weight[e] = std::move(r);
    }
    std::map<OEdge, RatVec> derived;
    for (const auto& [e, vec] : alpha) {
        OEdge rev = reversed(e);
        if (alpha.count(rev)) continue;
        RatVec neg;
        for (const Rational& q : vec) neg.push_back(-q);
        derived[rev] = std::move(neg);
        if (notes)
            notes->push_back("axial: derived " + total.labels[static_cast<size_t>(rev.first)] +
                             "->" + total.labels[static_cast<size_t>(rev.second)] +
                             " by the sign rule (negated direction, same r)");
    }
    for (auto& [e, vec] : derived) {
        weight[e] = weight.at(reversed(e));
        alpha[e] = std::move(vec);
    }
    for (const auto& e : total.edges)
        if (!alpha.count(OEdge{e.first, e.second}))
            throw schema_error(origin, "axial",
                               "no entry for edge '" + total.labels[static_cast<size_t>(e.first)] +
                                   "'--'" + total.labels[static_cast<size_t>(e.second)] + "'");

    const json& jconn = field(doc, "connection", origin);
    if (!jconn.is_object()) throw schema_error(origin, "connection", "expected an object");
    std::map<std::pair<OEdge, OEdge>, OEdge> theta;
    auto oedge_at = [&](const std::string& key, const std::string& loc) {
        auto [sa, sb] = split_arrow(key, origin, loc);
        for (const std::string& v : {sa, sb})
            if (!declared.count(v)) throw schema_error(origin, loc, "undeclared vertex '" + v + "'");
        OEdge e{total.vertex(sa), total.vertex(sb)};
        if (!total.has_edge(e.first, e.second))
            throw schema_error(origin, loc, "'" + sa + "'--'" + sb + "' is not an edge");
        return e;
    };
    for (const auto& item : jconn.items()) {
        const std::string loc = "connection[\"" + item.key() + "\"]";
        OEdge e = oedge_at(item.key(), loc);
        if (!item.value().is_object()) throw schema_error(origin, loc, "expected an object");
        for (const auto& entry : item.value().items()) {
            const std::string eloc = loc + "[\"" + entry.key() + "\"]";
            OEdge ep = oedge_at(entry.key(), eloc);
            if (ep.first != e.first)
                throw schema_error(origin, eloc, "source must be the source of the outer edge");
            OEdge img = oedge_at(str_at(entry.value(), origin, eloc), eloc);
            if (img.first != e.second)
                throw schema_error(origin, eloc, "image source must be the target of the outer edge");
            theta[{e, ep}] = img;
        }
    }

    return make_gkm_complex(std::move(complex), rank, std::move(alpha), std::move(weight),
                            std::move(theta));
}

GKMComplex parse_document(const std::string& path, std::vector<std::string>* notes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document_text(buf.str(), path, notes);
}

std::string serialize_document(const GKMComplex& gc) {
    json doc;
    doc["torus_rank"] = gc.rank;
    doc["vertices"] = gc.complex.labels;
    json jmembers = json::array();
    for (const Member& m : gc.complex.members) {
        json jm;
        jm["name"] = m.name;
        json mv = json::array();
        for (int v : m.vertices) mv.push_back(gc.complex.labels[static_cast<size_t>(v)]);
        jm["vertices"] = std::move(mv);
        json me = json::array();
        for (const auto& [a, b] : m.edges)
            me.push_back(json::array({gc.complex.labels[static_cast<size_t>(a)],
                                      gc.complex.labels[static_cast<size_t>(b)]}));
        jm["edges"] = std::move(me);
        jmembers.push_back(std::move(jm));
    }
    doc["members"] = std::move(jmembers);
    auto okey = [&](const OEdge& e) {
        return gc.complex.labels[static_cast<size_t>(e.first)] + "->" +
               gc.complex.labels[static_cast<size_t>(e.second)];
    };
    json jaxial = json::object();
    for (const auto& [e, vec] : gc.alpha) {
        json entry;
        json arr = json::array();
        for (const Rational& q : vec) arr.push_back(to_string(q));
        entry["alpha"] = std::move(arr);
        entry["r"] = weight_json(gc.weight_of(e));
        jaxial[okey(e)] = std::move(entry);
    }
    doc["axial"] = std::move(jaxial);
    json jconn = json::object();
    for (const auto& [pair, img] : gc.theta) jconn[okey(pair.first)][okey(pair.second)] = okey(img);
    doc["connection"] = std::move(jconn);
    return doc.dump(2) + "\n";
}

void write_document(const std::string& path, const GKMComplex& gc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << serialize_document(gc);
    if (!out) throw input_error("failed writing '" + path + "'");
}

std::string render_dot(const GKMComplex& gc, const Filtration* filt) {
    const Graph& g = gc.total;
    std::ostringstream out;
    out << "graph gkm {\n";
    out << "  node [shape=ellipse];\n";
    for (int v = 0; v < g.nverts(); ++v) {
        const std::string& name = g.labels[static_cast<size_t>(v)];
        std::string label =
            filt ? std::to_string(filt->position[static_cast<size_t>(v)]) + ": " + name : name;
        out << "  \"" << escape_dot(name) << "\" [label=\"" << escape_dot(label) << "\"];\n";
    }
    std::set<std::pair<int, int>> downward;
    if (filt)
        for (const auto& batch : filt->added)
            for (const auto& [s, t] : batch) downward.insert({std::min(s, t), std::max(s, t)});
    for (const auto& e : g.edges) {
        out << "  \"" << escape_dot(g.labels[static_cast<size_t>(e.first)]) << "\" -- \""
            << escape_dot(g.labels[static_cast<size_t>(e.second)]) << "\"";
        if (downward.count(e)) out << " [penwidth=2.2, color=\"#1f6feb\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gkm
