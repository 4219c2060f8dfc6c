// The congruence subring attached to a filtered GKM complex: membership,
// the triangular free-module basis, decomposition over it, and graded ranks.
// A class is a tuple of coefficient values indexed by vertex; it belongs to
// the ring when every downward Euler class divides the difference across its
// edge.  Basis classes vanish below their stratum and restrict to the full
// Euler product on it; the values above are found by integer linear algebra
// over a growing support, smallest solution first.
#pragma once

#include <string>
#include <vector>

#include "gkm/gkm.hpp"
#include "gkm/integer_linear.hpp"

namespace gkm {

struct CohomologyClass {
    TheorySpec spec;
    std::vector<Coefficient> values;  // by vertex id

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.spec == b.spec && a.values == b.values;
    }
};

CohomologyClass constant_class(const TheorySpec& spec, const Coefficient& c, int nverts);
CohomologyClass add_classes(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass sub_classes(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass mul_classes(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass scale_class(const CohomologyClass& a, const Coefficient& p);

struct Divisor {
    int s_pos = 0;  // filtration position of the lower endpoint
    std::vector<Int> chi;
    Coefficient euler;
};

struct CongruenceSystem {
    TheorySpec spec;
    std::vector<std::string> labels;  // vertex id -> label
    Filtration filt;
    std::vector<std::vector<Divisor>> at;  // per position, ordered by s_pos
    std::vector<Coefficient> top;          // product over the batch at each position

    int nverts() const { return static_cast<int>(labels.size()); }
    int strata() const { return static_cast<int>(filt.order.size()); }
};

enum class SystemError { none, not_divisive, coprimality };

struct SystemOutcome {
    SystemError error = SystemError::none;
    std::string detail;
    CongruenceSystem sys;

    bool ok() const { return error == SystemError::none; }
};

// Divisors come from the downward Euler data along the filtration.  Integral
// carriers require the divisive property; the rational variant of H does not.
// Divisors meeting at a vertex must be pairwise coprime, which for single
// edge classes means non-parallel characters.
SystemOutcome build_system(const GKMComplex& gc, const Filtration& filt, const TheorySpec& spec);

struct MemberCheck {
    bool member = true;
    int j = -1, s = -1;   // filtration positions of the first failing congruence
    std::string witness;  // rendered remainder, or the fractional quotient
};
MemberCheck is_member(const CongruenceSystem& sys, const CohomologyClass& x);

struct BasisClass {
    int j = 0;
    CohomologyClass cls;
};

enum class BasisError { none, no_integral_extension, cap_exceeded };

struct BasisOutcome {
    BasisError error = BasisError::none;
    std::string detail;
    std::vector<BasisClass> classes;

    bool ok() const { return error == BasisError::none; }
};

// One class per stratum.  Supports grow per retry: H starts homogeneous at
// the stratum degree and widens to degree_cap; K starts from the box spanned
// by the local divisors and fixed values and grows degree_cap times; MU is
// pinned to one combined degree by homogeneity of the Euler series, and its
// coefficients on the a-free block follow the H basis whenever that system
// is solvable, so degeneration to the additive law recovers the H classes.
// Ties among integer solutions are broken by centered lattice reduction and
// a unit-cube search minimizing support size, then the coefficient vector.
BasisOutcome compute_basis(const CongruenceSystem& sys, int degree_cap);

enum class DecomposeError { none, not_a_member, not_in_span };

struct Decomposition {
    DecomposeError error = DecomposeError::none;
    std::string detail;
    std::vector<Coefficient> coeffs;  // one per basis class

    bool ok() const { return error == DecomposeError::none; }
};

// Triangular elimination along the filtration; for integral carriers on
// divisive data every division is exact, so a failure is reported as a
// counterexample rather than an error.
Decomposition decompose(const CongruenceSystem& sys, const std::vector<BasisClass>& basis,
                        const CohomologyClass& x);

// Integral H only.  Entry d is the count of pairs (stratum, monomial) whose
// degrees sum to d; each entry is cross-checked against the rank of the
// degree-d member lattice computed directly from the congruences.
std::vector<int> graded_rank(const CongruenceSystem& sys, const std::vector<BasisClass>& basis,
                             int up_to_degree);

// Integral H only: canonical HNF basis of the lattice of member tuples whose
// values are all homogeneous of the given degree.  Columns run over strata in
// filtration order, then over degree-d monomials in lexicographic order.
IntMat member_lattice(const CongruenceSystem& sys, int degree);

// The same degree-d slice spanned by monomial multiples of the basis classes,
// in the same column layout; the basis must be graded for this to make sense.
IntMat basis_degree_lattice(const CongruenceSystem& sys, const std::vector<BasisClass>& basis,
                            int degree);

}  // namespace gkm
