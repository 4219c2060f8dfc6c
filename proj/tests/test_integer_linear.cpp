#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/integer_linear.hpp"
#include "test_support.hpp"

using namespace gkm;

namespace {

IntMat make(int rows, int cols, std::initializer_list<int> vals) {
    IntMat m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Int(*it++);
    return m;
}

IntMat random_mat(int rows, int cols, int bound) {
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Int(test::rand_int(-bound, bound));
    return m;
}

IntMat mul(const IntMat& a, const IntMat& b) {
    IntMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

IntVec matvec(const IntMat& a, const IntVec& x) {
    IntVec y(a.rows(), Int(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace

TEST_CASE("hermite form properties") {
    for (int trial = 0; trial < 40; ++trial) {
        IntMat A = random_mat(test::rand_int(1, 5), test::rand_int(1, 5), 9);
        Hermite h = hermite_normal_form(A);
        CHECK(mul(h.U, A) == h.H);
        // unimodular transform: all invariant factors of U are 1
        auto inv = smith_invariants(h.U);
        for (const auto& d : inv) CHECK(d == 1);
        // echelon with positive pivots, entries above reduced into [0, pivot)
        for (size_t j = 0; j < h.pivot_cols.size(); ++j) {
            int pc = h.pivot_cols[j];
            CHECK(h.H(static_cast<int>(j), pc) > 0);
            for (int c = 0; c < pc; ++c) CHECK(h.H(static_cast<int>(j), c) == 0);
            for (int i = 0; i < static_cast<int>(j); ++i) {
                CHECK(h.H(i, pc) >= 0);
                CHECK(h.H(i, pc) < h.H(static_cast<int>(j), pc));
            }
        }
        CHECK(h.rank == integer_rank(A));
    }
}

TEST_CASE("integer solve on pinned examples") {
    {
        auto s = solve_integer_linear(make(1, 1, {2}), {Int(4)});
        REQUIRE(s.solvable);
        CHECK(s.particular == IntVec{Int(2)});
        CHECK(s.kernel.empty());
    }
    {
        auto s = solve_integer_linear(make(1, 1, {2}), {Int(3)});
        CHECK(!s.solvable);
        CHECK(s.certificate_row == 0);
    }
    {
        auto s = solve_integer_linear(make(2, 2, {1, 1, 2, 2}), {Int(1), Int(2)});
        REQUIRE(s.solvable);
        CHECK(matvec(make(2, 2, {1, 1, 2, 2}), s.particular) == IntVec{Int(1), Int(2)});
        REQUIRE(s.kernel.size() == 1);
        IntMat got(1, 2);
        got(0, 0) = s.kernel[0][0];
        got(0, 1) = s.kernel[0][1];
        CHECK(lattice_hnf(got) == lattice_hnf(make(1, 2, {1, -1})));
    }
    {
        // inconsistent over Q already
        auto s = solve_integer_linear(make(2, 1, {1, 1}), {Int(0), Int(1)});
        CHECK(!s.solvable);
    }
}

TEST_CASE("integer solve round trips") {
    for (int trial = 0; trial < 60; ++trial) {
        int m = test::rand_int(1, 5), k = test::rand_int(1, 5);
        IntMat A = random_mat(m, k, 7);
        IntVec x0(k);
        for (auto& v : x0) v = Int(test::rand_int(-9, 9));
        IntVec b = matvec(A, x0);
        auto s = solve_integer_linear(A, b);
        REQUIRE(s.solvable);
        CHECK(matvec(A, s.particular) == b);
        for (const auto& kv : s.kernel) {
            IntVec z = matvec(A, kv);
            for (const auto& v : z) CHECK(v == 0);
        }
        // kernel basis spans the difference of any two solutions
        IntVec diff(k);
        for (int i = 0; i < k; ++i) diff[i] = x0[i] - s.particular[i];
        if (!s.kernel.empty()) {
            IntMat K(static_cast<int>(s.kernel.size()), k);
            for (size_t r = 0; r < s.kernel.size(); ++r)
                for (int c = 0; c < k; ++c) K(static_cast<int>(r), c) = s.kernel[r][c];
            IntVec red = reduce_mod_lattice(diff, lattice_hnf(K));
            for (const auto& v : red) CHECK(v == 0);
        } else {
            for (const auto& v : diff) CHECK(v == 0);
        }
    }
}

TEST_CASE("integer solve agrees with rational solvability") {
    for (int trial = 0; trial < 60; ++trial) {
        int m = test::rand_int(1, 4), k = test::rand_int(1, 4);
        IntMat A = random_mat(m, k, 5);
        IntVec b(m);
        for (auto& v : b) v = Int(test::rand_int(-9, 9));
        auto s = solve_integer_linear(A, b);
        RatMat Aq(m, k);
        RatVec bq(m);
        for (int i = 0; i < m; ++i) {
            bq[i] = Rational(b[i]);
            for (int j = 0; j < k; ++j) Aq(i, j) = Rational(A(i, j));
        }
        auto r = solve_rational_linear(Aq, bq);
        if (s.solvable) CHECK(r.solvable);
        if (!r.solvable) CHECK(!s.solvable);
    }
}

TEST_CASE("lattice canonical forms") {
    IntMat L = make(2, 3, {2, 0, 1, 0, 3, 1});
    // mixing rows unimodularly keeps the canonical basis
    IntMat M = make(2, 3, {2, 3, 2, 0, 3, 1});  // row0 + row1, row1
    CHECK(lattice_hnf(L) == lattice_hnf(M));
    IntMat N = make(2, 3, {2, 0, 1, 0, 3, 2});
    CHECK(!(lattice_hnf(L) == lattice_hnf(N)));

    IntMat H = lattice_hnf(L);
    IntVec member{4, 3, 3};  // 2*row0 + row1
    IntVec zero = reduce_mod_lattice(member, H);
    for (const auto& v : zero) CHECK(v == 0);
    IntVec red = reduce_mod_lattice(IntVec{1, 1, 1}, H);
    IntVec red2 = reduce_mod_lattice(red, H);
    CHECK(red == red2);
}

TEST_CASE("smith invariants") {
    CHECK(smith_invariants(make(2, 2, {2, 0, 0, 3})) == std::vector<Int>{Int(1), Int(6)});
    CHECK(smith_invariants(make(2, 2, {2, 4, 4, 8})) == std::vector<Int>{Int(2), Int(0)});
    CHECK(smith_invariants(IntMat::identity(3)) == std::vector<Int>{Int(1), Int(1), Int(1)});
    for (int trial = 0; trial < 30; ++trial) {
        IntMat A = random_mat(test::rand_int(1, 4), test::rand_int(1, 4), 6);
        auto d = smith_invariants(A);
        int rank = 0;
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] != 0) ++rank;
            if (i + 1 < d.size() && d[i + 1] != 0) {
                REQUIRE(d[i] != 0);
                CHECK(d[i + 1] % d[i] == 0);
            }
        }
        CHECK(rank == integer_rank(A));
    }
}

TEST_CASE("rational solve") {
    RatMat A(2, 3);
    A(0, 0) = 1;
    A(0, 1) = 1;
    A(0, 2) = 0;
    A(1, 0) = 0;
    A(1, 1) = 1;
    A(1, 2) = 1;
    auto s = solve_rational_linear(A, {Rational(1), Rational(0)});
    REQUIRE(s.solvable);
    CHECK(s.kernel.size() == 1);
    // free column pinned to zero in the particular solution
    CHECK(s.particular[2] == 0);
    CHECK(s.particular[0] + s.particular[1] == 1);

    RatMat B(2, 1);
    B(0, 0) = 1;
    B(1, 0) = 2;
    auto bad = solve_rational_linear(B, {Rational(1), Rational(1)});
    CHECK(!bad.solvable);
    CHECK(bad.certificate_row == 1);
}
