// Exact linear algebra over Z and Q: Hermite and Smith normal forms, integer
// and rational linear solvers, and lattice utilities.  Everything is
// deterministic: pivots are chosen by minimal absolute value with lowest index
// as tie-break, so repeated runs produce identical output.
#pragma once

#include "gkm/matrix.hpp"

namespace gkm {

// Row-style Hermite normal form: U*A = H with U unimodular and H in row
// echelon form, pivots positive, entries above each pivot reduced into
// [0, pivot).
struct Hermite {
    IntMat H;
    IntMat U;
    int rank = 0;
    std::vector<int> pivot_cols;
};
Hermite hermite_normal_form(const IntMat& A);

// Description of the solution set of A x = b over Z: one particular solution
// plus a basis of the integer kernel of A.  `kernel` is valid even when the
// system is unsolvable.  On failure `certificate_row` names an equation that
// cannot be satisfied (after the unimodular column reduction, its pivot either
// fails an exact division or a zero row meets a nonzero right-hand side).
struct IntegerSolution {
    bool solvable = false;
    IntVec particular;
    std::vector<IntVec> kernel;
    int certificate_row = -1;
};
IntegerSolution solve_integer_linear(const IntMat& A, const IntVec& b);

// Canonical HNF basis of the lattice spanned by the given rows (zero rows
// dropped).  Two row sets span the same lattice iff these agree.
IntMat lattice_hnf(const IntMat& rows);

// Reduce x modulo the lattice spanned by the rows of H (must be lattice_hnf
// output).  Centered division: members of the lattice reduce to exactly zero,
// everything else to a canonical small representative.
IntVec reduce_mod_lattice(IntVec x, const IntMat& H);

// Invariant factors d_1 | d_2 | ... (positive), padded with zeros up to
// min(rows, cols).
std::vector<Int> smith_invariants(IntMat A);

// rank over Q via fraction-free (Bareiss) elimination
int integer_rank(IntMat A);

// Gauss-Jordan over Q.  The particular solution pins every free variable to
// zero; the kernel basis has one vector per free column.
struct RationalSolution {
    bool solvable = false;
    RatVec particular;
    std::vector<RatVec> kernel;
    int certificate_row = -1;
};
RationalSolution solve_rational_linear(const RatMat& A, const RatVec& b);

}  // namespace gkm
