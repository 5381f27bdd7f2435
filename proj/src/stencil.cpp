#include "gevlab/stencil.hpp"

#include <algorithm>
#include <stdexcept>

namespace gevlab {

namespace {

// Fraction-free (Bareiss) forward elimination of the integer system V c = b,
// followed by exact rational back-substitution. The Vandermonde matrix over
// distinct integer nodes has nonzero leading minors, so no pivoting is
// needed and every Bareiss division is exact; a plain floating solve is
// useless here already at moderate k.
std::vector<Rational> solve_integer_system(std::vector<std::vector<BigInt>> m, std::vector<BigInt> b) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);

    BigInt prev = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        if (m[col][col] == 0) throw std::runtime_error("zero pivot in integer elimination");
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c <= n; ++c)
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        if (m[i][i] == 0) throw std::runtime_error("singular system");
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

BigInt ipow(BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Built once (thread-safe magic static); orders beyond the table throw in
// build_stencil before reaching here.
const Stencil& cached_stencil(int k) {
    static const std::vector<Stencil> cache = [] {
        std::vector<Stencil> v;
        v.reserve(kDefaultMaxStencilOrder + 1);
        for (int i = 0; i <= kDefaultMaxStencilOrder; ++i) v.push_back(build_stencil(i));
        return v;
    }();
    if (k < 0 || k > kDefaultMaxStencilOrder)
        throw std::invalid_argument("stencil order " + std::to_string(k) + " exceeds maximum " +
                                    std::to_string(kDefaultMaxStencilOrder));
    return cache[static_cast<std::size_t>(k)];
}

bool vec_less(const Vec& a, const Vec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

}  // namespace

std::vector<int> stencil_nodes(int k) {
    if (k < 0) throw std::invalid_argument("stencil order must be non-negative");
    // integers j with -(k+1)/2 < j <= (k+1)/2
    std::vector<int> out;
    for (int j = -(k / 2 + 1); j <= k / 2 + 1; ++j) {
        if (2 * j > -(k + 1) && 2 * j <= k + 1) out.push_back(j);
    }
    return out;
}

Stencil build_stencil(int k, int max_order) {
    if (k < 0) throw std::invalid_argument("stencil order must be non-negative");
    if (k > max_order)
        throw std::invalid_argument("stencil order " + std::to_string(k) + " exceeds maximum " +
                                    std::to_string(max_order));
    Stencil st;
    st.k = k;
    st.nodes = stencil_nodes(k);

    const std::size_t n = st.nodes.size();
    std::vector<std::vector<BigInt>> vmat(n, std::vector<BigInt>(n));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i) vmat[m][i] = ipow(BigInt(st.nodes[i]), static_cast<int>(m));

    std::vector<BigInt> rhs(n, 0);
    BigInt kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    rhs[n - 1] = kfact;

    st.coefficients = solve_integer_system(std::move(vmat), std::move(rhs));
    st.weights.reserve(n);
    for (const Rational& c : st.coefficients) st.weights.push_back(static_cast<double>(c));
    return st;
}

double apply(const Stencil& st, const ScalarField& u, const Vec& x, double h, const Vec& v) {
    if (!(h > 0)) throw std::invalid_argument("apply: step must be positive");
    double acc = 0.0;
    for (std::size_t i = 0; i < st.nodes.size(); ++i) acc += st.weights[i] * u(axpy(x, st.nodes[i] * h, v));
    return acc;
}

int MultiStencil::total_order() const {
    int t = 0;
    for (const Factor& f : factors) t += f.order;
    return t;
}

MultiStencil make_multi(std::vector<MultiStencil::Factor> factors, int max_order) {
    for (const auto& f : factors) {
        if (f.order <= 0) throw std::invalid_argument("multi-stencil factor order must be positive");
        if (f.order > max_order) throw std::invalid_argument("multi-stencil factor order exceeds maximum");
    }
    std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.direction != b.direction) return vec_less(a.direction, b.direction);
        return a.order < b.order;
    });
    return MultiStencil{std::move(factors)};
}

double apply_multi(const MultiStencil& ms, const ScalarField& u, const Vec& x, double h) {
    if (!(h > 0)) throw std::invalid_argument("apply_multi: step must be positive");
    if (ms.factors.empty()) return u(x);

    std::vector<const Stencil*> sts;
    sts.reserve(ms.factors.size());
    for (const auto& f : ms.factors) sts.push_back(&cached_stencil(f.order));

    // Lexicographic enumeration of index tuples keeps the summation order
    // independent of how the factors were originally listed.
    std::vector<std::size_t> idx(ms.factors.size(), 0);
    double acc = 0.0;
    for (;;) {
        double coeff = 1.0;
        Vec p = x;
        for (std::size_t d = 0; d < idx.size(); ++d) {
            coeff *= sts[d]->weights[idx[d]];
            p = axpy(p, sts[d]->nodes[idx[d]] * h, ms.factors[d].direction);
        }
        acc += coeff * u(p);

        bool done = true;
        for (std::size_t d = idx.size(); d-- > 0;) {
            if (++idx[d] < sts[d]->nodes.size()) {
                done = false;
                break;
            }
            idx[d] = 0;
        }
        if (done) return acc;
    }
}

double derivative_estimate(const ScalarField& u, const Vec& x, int k, const Vec& v, double h) {
    const Stencil& st = cached_stencil(k);
    return apply(st, u, x, h, v) / std::pow(h, k);
}

LeibnizSides leibniz_split(const ScalarField& f, const ScalarField& g, const Vec& x, double h, const Vec& v) {
    const Vec xh = axpy(x, h, v);
    const double fx = f(x), gx = g(x), fxh = f(xh), gxh = g(xh);
    LeibnizSides out;
    out.lhs = fxh * gxh - fx * gx;
    out.rhs = fxh * (gxh - gx) + (fxh - fx) * gx;
    return out;
}

double summation_by_parts_residual(std::span<const double> f, std::span<const double> g, double h) {
    if (!(h > 0)) throw std::invalid_argument("summation_by_parts_residual: step must be positive");
    if (g.size() != f.size() + 1)
        throw std::invalid_argument("summation_by_parts_residual: g must extend f's window by one node");
    const std::size_t n = f.size();
    auto fat = [&](std::ptrdiff_t i) { return (i >= 0 && i < static_cast<std::ptrdiff_t>(n)) ? f[static_cast<std::size_t>(i)] : 0.0; };
    auto gat = [&](std::ptrdiff_t i) { return g[static_cast<std::size_t>(i + 1)]; };  // g[0] sits at lattice -1

    double lhs = 0.0, rhs = 0.0;
    for (std::ptrdiff_t i = -1; i < static_cast<std::ptrdiff_t>(n); ++i)
        lhs += (fat(i + 1) - fat(i)) * gat(i);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        rhs += fat(i) * (gat(i - 1) - gat(i));
    return std::abs(lhs - rhs);
}

}  // namespace gevlab
