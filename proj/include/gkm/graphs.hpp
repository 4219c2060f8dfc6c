// Labeled graphs, graph complexes, and their step filtrations.  A complex is
// a family of member graphs over one global vertex set; the total graph is
// the union of the members.  Filtrations add one vertex at a time, always
// growing next to the earliest vertex that still has an outside neighbor,
// and for a complex every batch of freshly added edges has to fit inside a
// single member.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gkm {

struct Graph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor ids

    int nverts() const { return static_cast<int>(labels.size()); }
    int vertex(const std::string& label) const;  // input_error when absent
    bool has_edge(int a, int b) const;
    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }
};

Graph make_graph(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& edges);

bool is_regular(const Graph& g, int* valence = nullptr);
bool is_connected(const Graph& g);

// one face: a subset of the global vertices and edges among them
struct Member {
    std::string name;
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted

    bool contains_vertex(int v) const;
    bool contains_edge(const std::pair<int, int>& e) const;
    bool same_underlying(const Member& o) const { return vertices == o.vertices && edges == o.edges; }
};

struct MemberSpec {
    std::string name;  // optional; empty gets a generated one
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

struct GraphComplex {
    std::vector<std::string> labels;
    std::vector<Member> members;

    Graph total() const;
    // the member graph as a standalone labeled graph
    Graph member_graph(const Member& m) const;
};

GraphComplex make_complex(const std::vector<std::string>& labels, const std::vector<MemberSpec>& members);
GraphComplex complex_of_graph(const Graph& g);  // one member carrying everything

// vertex/edge-wise intersection of two members
Member intersect(const Member& a, const Member& b);

// the complex axioms: members regular and connected, every pairwise
// intersection that contains an edge is itself a member, no stray vertices
struct ComplexReport {
    bool ok = true;
    std::vector<std::string> issues;
};
ComplexReport validate_complex(const GraphComplex& c);

enum class FilterStatus { Ok, Disconnected, NoFiltration };

struct Filtration {
    std::vector<int> order;     // position -> vertex id
    std::vector<int> position;  // vertex id -> position
    // per position: edges joining the new vertex to earlier ones, as
    // (earlier id, new id), ordered by the earlier vertex's position
    std::vector<std::vector<std::pair<int, int>>> added;
    std::vector<int> d;  // batch sizes
};

struct FilterOutcome {
    FilterStatus status = FilterStatus::Ok;
    Filtration filtration;
    std::string detail;
};

FilterOutcome filter_regular(const Graph& g, const std::string& seed);
FilterOutcome filter_complex(const GraphComplex& c, const std::string& seed);

}  // namespace gkm
