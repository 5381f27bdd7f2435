#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "gevlab/field.hpp"
#include "gevlab/geometry.hpp"

namespace gevlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultMaxStencilOrder = 16;

// Incremental quotient of order k: nodes are the k+1 consecutive integers in
// (-(k+1)/2, (k+1)/2], coefficients solve the moment system
//   sum_i c_i j_i^{m-1} = 0  (m = 1..k),  = k!  (m = k+1)
// exactly in rational arithmetic.
struct Stencil {
    int k = 0;
    std::vector<int> nodes;
    std::vector<Rational> coefficients;
    std::vector<double> weights;  // coefficients rounded once, for application
};

std::vector<int> stencil_nodes(int k);
Stencil build_stencil(int k, int max_order = kDefaultMaxStencilOrder);

// T_h^v u(x) = sum_i c_i u(x + j_i h v). Undivided: scales like h^k D_v^k u.
double apply(const Stencil& st, const ScalarField& u, const Vec& x, double h, const Vec& v);

// Ordered first on direction (lexicographic), then order, so that
// application order is canonical and permutation-invariant bit for bit.
struct MultiStencil {
    struct Factor {
        Vec direction{1.0, 0.0};
        int order = 1;
    };
    std::vector<Factor> factors;

    int total_order() const;
};

MultiStencil make_multi(std::vector<MultiStencil::Factor> factors, int max_order = kDefaultMaxStencilOrder);

// Flattened sum over index tuples with product coefficients, evaluated in
// canonical order.
double apply_multi(const MultiStencil& ms, const ScalarField& u, const Vec& x, double h);

// apply / h^k; converges to D_v^k u(x) as h -> 0, at rate O(h) for C^{k+1}
// fields (O(h^2) when the node set is symmetric).
double derivative_estimate(const ScalarField& u, const Vec& x, int k, const Vec& v, double h);

// First-order product rule: T_h(fg)(x) = f(x+hv) T_h g(x) + T_h f(x) g(x).
struct LeibnizSides {
    double lhs = 0.0;
    double rhs = 0.0;
};
LeibnizSides leibniz_split(const ScalarField& f, const ScalarField& g, const Vec& x, double h, const Vec& v);

// | sum_i T_h f(x_i) g(x_i) - sum_i f(x_i) T_{-h} g(x_i) | on a lattice.
// f has finite support (implicitly zero outside its window); g must supply
// one extra node on the left: g[i] sits at lattice index i-1 relative to f.
double summation_by_parts_residual(std::span<const double> f, std::span<const double> g, double h);

}  // namespace gevlab
