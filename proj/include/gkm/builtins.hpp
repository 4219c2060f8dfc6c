// Ready-made GKM complexes: the two-triangle weighted Grassmannian subcomplex,
// weighted projective lines, and complete graphs with the standard projective
// axial data.  All three come from one engine that assigns a character Y_i
// and a nonzero weight c_i per vertex and sets
//
//   alpha(v_i v_j) = Y_j - (c_j / c_i) Y_i,   r_{v_i v_j} = |c_i|,
//
// with the connection that carries v_i v_l to v_j v_l.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/gkm.hpp"

namespace gkm {

struct WeightedProjectiveSpec {
    int rank = 0;
    std::vector<Int> weights;                   // per vertex, nonzero
    std::vector<std::vector<Int>> characters;   // per vertex, pairwise distinct
};

// the engine; every member must close under the endpoint shift, which holds
// for complete members and single edges
GKMComplex make_weighted_gkm(const WeightedProjectiveSpec& spec, const GraphComplex& complex);

// two triangles v0 v1 v2 and v0 v1 v3 glued along v0 v1, plus the shared
// edge as its own member; weights may be negative but not zero
GKMComplex make_fig3_complex(const Int& c0, const Int& c1, const Int& c2, const Int& c3);

// the spindle: two fixed points joined by one edge, weights positive
GKMComplex make_weighted_projective_line(const Int& q0, const Int& q1);

// complete graph on n+1 vertices with alpha(v_i v_j) = y_j - y_i
GKMComplex make_complete_gkm(int n_plus_1);

// the builtin named by a call expression such as "complete(4)",
// "fig3(8,4,2,2)", or "wpl(1,2)"; nullopt when the text is not shaped like
// one, input_error for an unknown name or bad arguments
std::optional<GKMComplex> builtin_complex(const std::string& text);

}  // namespace gkm
