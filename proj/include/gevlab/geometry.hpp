#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace gevlab {

// Points and directions in R^n, n in {1,2}. The second component is
// ignored for n == 1.
using Vec = std::array<double, 2>;

// Multi-index (theta_1, theta_2); order() is |theta|.
struct MultiIndex {
    std::array<int, 2> idx{0, 0};

    MultiIndex() = default;
    MultiIndex(int a, int b = 0) : idx{a, b} {}

    int order() const { return idx[0] + idx[1]; }
    int operator[](int i) const { return idx[static_cast<std::size_t>(i)]; }
};

inline Vec vec1(double x) { return {x, 0.0}; }

inline double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec add(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec axpy(const Vec& a, double t, const Vec& v) { return {a[0] + t * v[0], a[1] + t * v[1]}; }
inline Vec scaled(const Vec& a, double t) { return {a[0] * t, a[1] * t}; }

}  // namespace gevlab
