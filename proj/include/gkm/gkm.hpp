// Axial data over a graph complex and the axioms that make it a GKM complex:
// per-orientation direction vectors alpha with weights r_e, a connection
// theta acting within each member, the congruence condition relating the two,
// and the downward Euler data a filtration extracts for the cohomology layer.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/graphs.hpp"
#include "gkm/matrix.hpp"
#include "gkm/theory.hpp"

namespace gkm {

using OEdge = std::pair<int, int>;  // oriented: (source, target)

inline OEdge reversed(const OEdge& e) { return {e.second, e.first}; }

struct GKMComplex {
    GraphComplex complex;
    Graph total;  // cached union graph
    int rank = 0;
    std::map<OEdge, RatVec> alpha;
    std::map<OEdge, Int> weight;                   // r_e, positive
    std::map<std::pair<OEdge, OEdge>, OEdge> theta;

    const RatVec& alpha_of(const OEdge& e) const;
    const Int& weight_of(const OEdge& e) const;
    std::string edge_text(const OEdge& e) const;
};

// Structural assembly: every oriented edge must carry alpha (of length rank)
// and a positive weight; theta entries must reference oriented edges of the
// total graph.  Mathematical axioms are checked by the validators below.
GKMComplex make_gkm_complex(GraphComplex complex, int rank,
                            std::map<OEdge, RatVec> alpha,
                            std::map<OEdge, Int> weight,
                            std::map<std::pair<OEdge, OEdge>, OEdge> theta);

// least positive integer r with r * alpha(e) integral
Int rtilde(const GKMComplex& gc, const OEdge& e);
// that scaling applied: the integral character attached to e
std::vector<Int> integral_character(const GKMComplex& gc, const OEdge& e);

// directions nonzero, pairwise independent around each vertex within each
// member, and the weight identity r_e alpha(e) = +- r_eb alpha(eb) in Z^n
struct AxialReport {
    bool ok = true;
    std::vector<std::string> issues;
};
AxialReport validate_axial(const GKMComplex& gc);

// connection axioms per member plus the congruence condition; for every
// valid pair the minimal positive c with c*(alpha(theta_e(e')) - alpha(e'))
// an integer multiple of r_e alpha(e)
struct CongruenceWitness {
    OEdge e;
    OEdge eprime;
    Int c;
};
struct ConnectionReport {
    bool ok = true;
    std::vector<std::string> issues;
    std::vector<CongruenceWitness> witnesses;
};
ConnectionReport validate_connection(const GKMComplex& gc);

// divisive: every downward direction is already integral
struct DivisiveCheck {
    bool divisive = true;
    std::string witness;
};
DivisiveCheck check_divisive(const GKMComplex& gc, const Filtration& filt);

struct DownwardEdge {
    int s_pos = 0;     // filtration position of the lower endpoint
    int s_vertex = 0;  // its vertex id
    std::vector<Int> chi;
    Coefficient euler;
};
struct DownwardData {
    TheorySpec spec;
    std::vector<std::vector<DownwardEdge>> at;  // per filtration position
    std::vector<Coefficient> total;             // product of the batch classes
};
DownwardData downward_euler_data(const GKMComplex& gc, const Filtration& filt, const TheorySpec& spec);

}  // namespace gkm
