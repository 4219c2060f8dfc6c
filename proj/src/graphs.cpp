#include "gkm/graphs.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) throw input_error("vertex set is empty");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw input_error("empty vertex label");
        if (!seen.insert(l).second) throw input_error("duplicate vertex label '" + l + "'");
    }
}

int find_label(const std::vector<std::string>& labels, const std::string& l) {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return static_cast<int>(i);
    throw input_error("unknown vertex '" + l + "'");
}

std::vector<std::vector<int>> build_adj(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::string edge_text(const Graph& g, const std::pair<int, int>& e) {
    return g.labels[static_cast<size_t>(e.first)] + "-" + g.labels[static_cast<size_t>(e.second)];
}

}  // namespace

int Graph::vertex(const std::string& label) const { return find_label(labels, label); }

bool Graph::has_edge(int a, int b) const {
    return std::binary_search(edges.begin(), edges.end(), norm_edge(a, b));
}

Graph make_graph(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& edges) {
    check_labels(labels);
    Graph g;
    g.labels = labels;
    for (const auto& [la, lb] : edges) {
        int a = find_label(labels, la);
        int b = find_label(labels, lb);
        if (a == b) throw input_error("self loop at '" + la + "'");
        g.edges.push_back(norm_edge(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw input_error("duplicate edge");
    g.adj = build_adj(g.nverts(), g.edges);
    return g;
}

bool is_regular(const Graph& g, int* valence) {
    int v0 = g.degree(0);
    for (int v = 1; v < g.nverts(); ++v)
        if (g.degree(v) != v0) return false;
    if (valence) *valence = v0;
    return true;
}

bool is_connected(const Graph& g) {
    std::vector<char> seen(static_cast<size_t>(g.nverts()), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == g.nverts();
}

bool Member::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Member::contains_edge(const std::pair<int, int>& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Graph GraphComplex::total() const {
    Graph g;
    g.labels = labels;
    std::set<std::pair<int, int>> all;
    for (const auto& m : members) all.insert(m.edges.begin(), m.edges.end());
    g.edges.assign(all.begin(), all.end());
    g.adj = build_adj(g.nverts(), g.edges);
    return g;
}

Graph GraphComplex::member_graph(const Member& m) const {
    Graph g;
    std::vector<int> local(labels.size(), -1);
    for (size_t i = 0; i < m.vertices.size(); ++i) {
        local[static_cast<size_t>(m.vertices[i])] = static_cast<int>(i);
        g.labels.push_back(labels[static_cast<size_t>(m.vertices[i])]);
    }
    for (auto [a, b] : m.edges)
        g.edges.push_back(norm_edge(local[static_cast<size_t>(a)], local[static_cast<size_t>(b)]));
    std::sort(g.edges.begin(), g.edges.end());
    g.adj = build_adj(g.nverts(), g.edges);
    return g;
}

GraphComplex make_complex(const std::vector<std::string>& labels, const std::vector<MemberSpec>& specs) {
    check_labels(labels);
    if (specs.empty()) throw input_error("complex has no members");
    GraphComplex c;
    c.labels = labels;
    std::set<std::string> names;
    for (size_t k = 0; k < specs.size(); ++k) {
        const auto& spec = specs[k];
        Member m;
        m.name = spec.name.empty() ? "member" + std::to_string(k + 1) : spec.name;
        if (!names.insert(m.name).second) throw input_error("duplicate member name '" + m.name + "'");
        if (spec.vertices.empty()) throw input_error("member '" + m.name + "' has no vertices");
        for (const auto& l : spec.vertices) m.vertices.push_back(find_label(labels, l));
        std::sort(m.vertices.begin(), m.vertices.end());
        if (std::adjacent_find(m.vertices.begin(), m.vertices.end()) != m.vertices.end())
            throw input_error("member '" + m.name + "' repeats a vertex");
        for (const auto& [la, lb] : spec.edges) {
            int a = find_label(labels, la);
            int b = find_label(labels, lb);
            if (a == b) throw input_error("self loop at '" + la + "' in member '" + m.name + "'");
            if (!m.contains_vertex(a) || !m.contains_vertex(b))
                throw input_error("edge " + la + "-" + lb + " leaves member '" + m.name + "'");
            m.edges.push_back(norm_edge(a, b));
        }
        std::sort(m.edges.begin(), m.edges.end());
        if (std::adjacent_find(m.edges.begin(), m.edges.end()) != m.edges.end())
            throw input_error("duplicate edge in member '" + m.name + "'");
        for (const auto& other : c.members)
            if (other.same_underlying(m))
                throw input_error("members '" + other.name + "' and '" + m.name + "' coincide");
        c.members.push_back(std::move(m));
    }
    return c;
}

GraphComplex complex_of_graph(const Graph& g) {
    GraphComplex c;
    c.labels = g.labels;
    Member m;
    m.name = "total";
    for (int v = 0; v < g.nverts(); ++v) m.vertices.push_back(v);
    m.edges = g.edges;
    c.members.push_back(std::move(m));
    return c;
}

Member intersect(const Member& a, const Member& b) {
    Member out;
    out.name = a.name + "&" + b.name;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                          std::back_inserter(out.vertices));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::back_inserter(out.edges));
    return out;
}

ComplexReport validate_complex(const GraphComplex& c) {
    ComplexReport report;
    auto flag = [&](std::string msg) {
        report.ok = false;
        report.issues.push_back(std::move(msg));
    };

    std::vector<char> covered(c.labels.size(), 0);
    for (const auto& m : c.members) {
        for (int v : m.vertices) covered[static_cast<size_t>(v)] = 1;
        Graph g = c.member_graph(m);
        if (!is_regular(g)) flag("member '" + m.name + "' is not regular");
        if (!is_connected(g)) flag("member '" + m.name + "' is not connected");
    }
    for (size_t v = 0; v < covered.size(); ++v)
        if (!covered[v]) flag("vertex '" + c.labels[v] + "' lies in no member");

    for (size_t i = 0; i < c.members.size(); ++i)
        for (size_t j = i + 1; j < c.members.size(); ++j) {
            Member common = intersect(c.members[i], c.members[j]);
            if (common.edges.empty()) continue;
            bool found = false;
            for (const auto& m : c.members)
                if (m.same_underlying(common)) {
                    found = true;
                    break;
                }
            if (!found)
                flag("the intersection of '" + c.members[i].name + "' and '" + c.members[j].name +
                     "' contains an edge but is not a member");
        }
    return report;
}

namespace {

struct FilterSearch {
    const Graph& g;
    const GraphComplex* complex = nullptr;  // member condition applies when set
    std::vector<int> order;
    std::vector<int> position;
    std::vector<std::vector<std::pair<int, int>>> added;
    size_t deepest = 0;
    std::string stuck;

    explicit FilterSearch(const Graph& graph) : g(graph), position(graph.labels.size(), -1) {}

    bool placed(int v) const { return position[static_cast<size_t>(v)] >= 0; }

    // least position whose vertex still has an outside neighbor
    int growth_position() const {
        for (size_t l = 0; l < order.size(); ++l)
            for (int w : g.adj[static_cast<size_t>(order[l])])
                if (!placed(w)) return static_cast<int>(l);
        return -1;
    }

    std::vector<std::pair<int, int>> batch_for(int v) const {
        std::vector<std::pair<int, int>> out;
        for (int w : g.adj[static_cast<size_t>(v)])
            if (placed(w)) out.emplace_back(w, v);
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            return position[static_cast<size_t>(a.first)] < position[static_cast<size_t>(b.first)];
        });
        return out;
    }

    bool batch_fits(const std::vector<std::pair<int, int>>& batch) const {
        if (!complex) return true;
        for (const auto& m : complex->members) {
            bool all = true;
            for (const auto& e : batch)
                if (!m.contains_edge(norm_edge(e.first, e.second))) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }

    void note_stuck(int v, const std::vector<std::pair<int, int>>& batch) {
        if (order.size() < deepest && !stuck.empty()) return;
        deepest = order.size();
        std::ostringstream os;
        os << "after";
        for (int u : order) os << ' ' << g.labels[static_cast<size_t>(u)];
        os << ", adding " << g.labels[static_cast<size_t>(v)] << " would bring in";
        for (const auto& e : batch) os << ' ' << edge_text(g, norm_edge(e.first, e.second));
        os << ", and no member contains all of these edges";
        stuck = os.str();
    }

    void place(int v, std::vector<std::pair<int, int>> batch) {
        position[static_cast<size_t>(v)] = static_cast<int>(order.size());
        order.push_back(v);
        added.push_back(std::move(batch));
    }

    void unplace() {
        position[static_cast<size_t>(order.back())] = -1;
        order.pop_back();
        added.pop_back();
    }

    bool extend() {
        if (order.size() == g.labels.size()) return true;
        int k = growth_position();
        if (k < 0) return false;  // unreachable once connectivity is checked
        std::vector<int> candidates;
        for (int w : g.adj[static_cast<size_t>(order[static_cast<size_t>(k)])])
            if (!placed(w)) candidates.push_back(w);
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return g.labels[static_cast<size_t>(a)] < g.labels[static_cast<size_t>(b)];
        });
        for (int v : candidates) {
            auto batch = batch_for(v);
            if (!batch_fits(batch)) {
                note_stuck(v, batch);
                continue;
            }
            place(v, std::move(batch));
            if (extend()) return true;
            unplace();
        }
        return false;
    }
};

FilterOutcome run_filter(const Graph& g, const GraphComplex* complex, const std::string& seed) {
    FilterOutcome out;
    if (!is_connected(g)) {
        out.status = FilterStatus::Disconnected;
        out.detail = "the total graph is not connected";
        return out;
    }
    int start;
    if (seed.empty()) {
        start = 0;
        for (int v = 1; v < g.nverts(); ++v)
            if (g.labels[static_cast<size_t>(v)] < g.labels[static_cast<size_t>(start)]) start = v;
    } else {
        start = g.vertex(seed);
    }

    FilterSearch search{g};
    search.complex = complex;
    search.place(start, {});
    if (!search.extend()) {
        out.status = FilterStatus::NoFiltration;
        out.detail = search.stuck.empty() ? "no admissible vertex order from this seed" : search.stuck;
        return out;
    }
    out.filtration.order = std::move(search.order);
    out.filtration.position = std::move(search.position);
    out.filtration.added = std::move(search.added);
    for (const auto& batch : out.filtration.added)
        out.filtration.d.push_back(static_cast<int>(batch.size()));
    return out;
}

}  // namespace

FilterOutcome filter_regular(const Graph& g, const std::string& seed) {
    return run_filter(g, nullptr, seed);
}

FilterOutcome filter_complex(const GraphComplex& c, const std::string& seed) {
    Graph g = c.total();
    return run_filter(g, &c, seed);
}

}  // namespace gkm
