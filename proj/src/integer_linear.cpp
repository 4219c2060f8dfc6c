#include "gkm/integer_linear.hpp"

#include "gkm/errors.hpp"

namespace gkm {

Hermite hermite_normal_form(const IntMat& A) {
    Hermite out{A, IntMat::identity(A.rows()), 0, {}};
    IntMat& H = out.H;
    IntMat& U = out.U;
    const int m = A.rows(), n = A.cols();
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        // Euclid over the entries of this column at rows >= r
        while (true) {
            int piv = -1;
            for (int i = r; i < m; ++i) {
                if (H(i, col) == 0) continue;
                if (piv < 0 || abs(H(i, col)) < abs(H(piv, col))) piv = i;
            }
            if (piv < 0) break;
            H.swap_rows(r, piv);
            U.swap_rows(r, piv);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (H(i, col) == 0) continue;
                Int q = round_div(H(i, col), H(r, col));
                H.sub_row(i, r, q);
                U.sub_row(i, r, q);
                if (H(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H(r, col) == 0) continue;
        if (H(r, col) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(H(i, col), H(r, col));
            H.sub_row(i, r, q);
            U.sub_row(i, r, q);
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    return out;
}

IntegerSolution solve_integer_linear(const IntMat& A, const IntVec& b) {
    const int m = A.rows(), k = A.cols();
    if (static_cast<int>(b.size()) != m)
        throw internal_error("solve_integer_linear: rhs size mismatch");

    // Column-reduce A via the HNF of its transpose: A*V = W with V unimodular
    // and column j of W having its topmost nonzero entry at row pivot_cols[j].
    IntMat At(k, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) At(j, i) = A(i, j);
    Hermite h = hermite_normal_form(At);
    const int r = h.rank;

    IntegerSolution out;
    for (int j = r; j < k; ++j) {
        IntVec v(k);
        for (int c = 0; c < k; ++c) v[c] = h.U(j, c);
        out.kernel.push_back(std::move(v));
    }

    // forward-substitute W y = b down the pivot rows
    IntVec residual = b;
    IntVec y(r);
    for (int j = 0; j < r; ++j) {
        int row = h.pivot_cols[j];
        const Int& p = h.H(j, row);
        if (residual[row] % p != 0) {
            out.certificate_row = row;
            return out;
        }
        y[j] = residual[row] / p;
        if (y[j] != 0)
            for (int i = 0; i < m; ++i) residual[i] -= y[j] * h.H(j, i);
    }
    for (int i = 0; i < m; ++i) {
        if (residual[i] != 0) {
            out.certificate_row = i;
            return out;
        }
    }

    out.solvable = true;
    out.particular.assign(k, 0);
    for (int j = 0; j < r; ++j) {
        if (y[j] == 0) continue;
        for (int c = 0; c < k; ++c) out.particular[c] += y[j] * h.U(j, c);
    }
    return out;
}

IntMat lattice_hnf(const IntMat& rows) {
    Hermite h = hermite_normal_form(rows);
    IntMat out(h.rank, rows.cols());
    for (int i = 0; i < h.rank; ++i)
        for (int c = 0; c < rows.cols(); ++c) out(i, c) = h.H(i, c);
    return out;
}

IntVec reduce_mod_lattice(IntVec x, const IntMat& H) {
    if (H.rows() == 0) return x;
    if (static_cast<int>(x.size()) != H.cols())
        throw internal_error("reduce_mod_lattice: size mismatch");
    for (int i = 0; i < H.rows(); ++i) {
        int pc = 0;
        while (pc < H.cols() && H(i, pc) == 0) ++pc;
        if (pc == H.cols()) throw internal_error("reduce_mod_lattice: zero basis row");
        Int q = round_div(x[pc], H(i, pc));
        if (q == 0) continue;
        for (int c = 0; c < H.cols(); ++c) x[c] -= q * H(i, c);
    }
    return x;
}

std::vector<Int> smith_invariants(IntMat A) {
    const int m = A.rows(), n = A.cols();
    const int k = std::min(m, n);
    std::vector<Int> d(k, 0);
    int t = 0;  // current corner
    while (t < k) {
        // locate the minimal nonzero entry in the remaining block
        int pr = -1, pc = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (A(i, j) == 0) continue;
                if (pr < 0 || abs(A(i, j)) < abs(A(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        A.swap_rows(t, pr);
        for (int i = t; i < m; ++i) std::swap(A(i, t), A(i, pc));

        bool dirty = false;
        for (int i = t + 1; i < m; ++i) {
            if (A(i, t) == 0) continue;
            Int q = round_div(A(i, t), A(t, t));
            A.sub_row(i, t, q);
            if (A(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < n; ++j) {
            if (A(t, j) == 0) continue;
            Int q = round_div(A(t, j), A(t, t));
            for (int i = t; i < m; ++i) A(i, j) -= q * A(i, t);
            if (A(t, j) != 0) dirty = true;
        }
        if (dirty) continue;

        // corner clean; force divisibility into the rest of the block
        bool divides_all = true;
        for (int i = t + 1; i < m && divides_all; ++i)
            for (int j = t + 1; j < n && divides_all; ++j)
                if (A(i, j) % A(t, t) != 0) {
                    // fold that row in and restart the corner
                    for (int c = t; c < n; ++c) A(t, c) += A(i, c);
                    divides_all = false;
                }
        if (!divides_all) continue;
        d[t] = abs(A(t, t));
        ++t;
    }
    return d;
}

int integer_rank(IntMat A) {
    const int m = A.rows(), n = A.cols();
    // Bareiss fraction-free elimination
    Int prev(1);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (A(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        A.swap_rows(rank, piv);
        for (int i = rank + 1; i < m; ++i) {
            for (int j = col + 1; j < n; ++j)
                A(i, j) = (A(rank, col) * A(i, j) - A(i, col) * A(rank, j)) / prev;
            A(i, col) = 0;
        }
        prev = A(rank, col);
        ++rank;
    }
    return rank;
}

RationalSolution solve_rational_linear(const RatMat& A, const RatVec& b) {
    const int m = A.rows(), n = A.cols();
    if (static_cast<int>(b.size()) != m)
        throw internal_error("solve_rational_linear: rhs size mismatch");
    RatMat M(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n) = b[i];
    }
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(n, -1);
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (M(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        M.swap_rows(r, piv);
        Rational p = M(r, col);
        for (int j = col; j <= n; ++j) M(r, j) /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || M(i, col) == 0) continue;
            Rational q = M(i, col);
            for (int j = col; j <= n; ++j) M(i, j) -= q * M(r, j);
        }
        pivot_col_of_row.push_back(col);
        pivot_row_of_col[col] = r;
        ++r;
    }

    RationalSolution out;
    for (int i = r; i < m; ++i)
        if (M(i, n) != 0) {
            out.certificate_row = i;
            return out;
        }
    out.solvable = true;
    out.particular.assign(n, Rational(0));
    for (int i = 0; i < r; ++i) out.particular[pivot_col_of_row[i]] = M(i, n);
    for (int col = 0; col < n; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        RatVec v(n, Rational(0));
        v[col] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -M(i, col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace gkm
