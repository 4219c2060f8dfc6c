// Exponent vectors and the graded-lex term order.  Exponents may be negative
// (Laurent monomials); "degree" always means the plain coordinate sum.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gkm {

using Expo = std::vector<int32_t>;

inline int64_t degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), int64_t{0});
}

// total degree first, then lexicographic left to right
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int64_t da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool expo_nonneg(const Expo& a) {
    return std::all_of(a.begin(), a.end(), [](int32_t x) { return x >= 0; });
}

// a divides b in the ordinary polynomial sense (componentwise <=)
inline bool expo_divides(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// all nonnegative exponent vectors of length nvars with coordinate sum == deg,
// listed in increasing graded-lex order
std::vector<Expo> monomials_of_degree(int nvars, int deg);

// coordinate sum <= deg, increasing graded-lex order
std::vector<Expo> monomials_up_to_degree(int nvars, int deg);

// integer box lo <= e <= hi componentwise, increasing graded-lex order
std::vector<Expo> monomials_in_box(const Expo& lo, const Expo& hi);

}  // namespace gkm
