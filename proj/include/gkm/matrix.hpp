// Minimal dense matrix over an exact scalar.  Row-major storage, bounds are
// the caller's responsibility beyond debug asserts; all we ever do with these
// is elimination, so no arithmetic operators beyond what that needs.
#pragma once

#include <cassert>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }
    const T& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    // row i -= q * row j
    void sub_row(int i, int j, const T& q) {
        if (q == 0) return;
        for (int c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
    }

    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rational>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

}  // namespace gkm
