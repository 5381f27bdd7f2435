#include "gevlab/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "gevlab/jet.hpp"

namespace gevlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Jet of t -> |y + t e|^2.
Jet radius2_jet(const Vec& y, const Vec& e, int order) {
    Jet q(order);
    q[0] = norm2(y);
    if (order >= 1) q[1] = 2.0 * dot(y, e);
    if (order >= 2) q[2] = norm2(e);
    return q;
}

// Coordinate-wise pattern search around x0; deterministic, a few rounds of
// step halving. Used to sharpen sampled suprema.
template <typename F>
double refine_max(F&& f, std::vector<double> x, const std::vector<double>& lo, const std::vector<double>& hi) {
    double best = f(x);
    std::vector<double> step(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) step[d] = 0.05 * (hi[d] - lo[d]);
    for (int round = 0; round < 10; ++round) {
        for (std::size_t d = 0; d < x.size(); ++d) {
            for (double sgn : {-1.0, 1.0}) {
                std::vector<double> cand = x;
                cand[d] = std::clamp(cand[d] + sgn * step[d], lo[d], hi[d]);
                const double v = f(cand);
                if (v > best) {
                    best = v;
                    x = cand;
                }
            }
            step[d] *= 0.5;
        }
    }
    return best;
}

struct SampleDomain1D {
    // x in [-1, 1], y = sign * radius, radius in (0, r0]
    double r0;
};

}  // namespace

double fractional_normalization(int n, double s) {
    if (n != 1 && n != 2) throw std::invalid_argument("kernel dimension must be 1 or 2");
    if (!(s > 0.5 && s < 1.0)) throw std::invalid_argument("s must lie strictly inside (1/2, 1)");
    return std::pow(2.0, 2.0 * s) * s * std::tgamma(n / 2.0 + s) /
           (std::pow(kPi, n / 2.0) * std::tgamma(1.0 - s));
}

Kernel fractional_kernel(int n, double s) {
    Kernel k;
    k.kind_ = Kernel::Kind::fractional;
    k.dim_ = n;
    k.s_ = s;
    k.cns_ = fractional_normalization(n, s);
    return k;
}

Kernel perturbed_kernel(int n, double s, double eps, ScalarField phi, ScalarField psi) {
    if (n != 1) throw std::invalid_argument("perturbed kernel: only n = 1 is supported");
    Kernel k;
    k.kind_ = Kernel::Kind::perturbed;
    k.dim_ = n;
    k.s_ = s;
    k.cns_ = fractional_normalization(n, s);
    k.eps_ = eps;
    k.phi_ = std::move(phi);
    k.psi_ = std::move(psi);
    if (std::abs(eps) * k.phi_.sup_bound() * k.psi_.sup_bound() >= 1.0)
        throw std::invalid_argument("perturbed kernel: |eps| sup|phi| sup|psi| must stay below 1");
    return k;
}

Kernel custom_kernel(int n, double s, std::function<double(const Vec&, const Vec&)> f) {
    if (n != 1 && n != 2) throw std::invalid_argument("kernel dimension must be 1 or 2");
    if (!(s > 0.5 && s < 1.0)) throw std::invalid_argument("s must lie strictly inside (1/2, 1)");
    Kernel k;
    k.kind_ = Kernel::Kind::custom;
    k.dim_ = n;
    k.s_ = s;
    k.cns_ = fractional_normalization(n, s);
    k.custom_ = std::move(f);
    return k;
}

std::string Kernel::describe() const {
    switch (kind_) {
        case Kind::fractional: return "fractional";
        case Kind::perturbed: return "perturbed";
        default: return "custom (unchecked derivatives)";
    }
}

double Kernel::eval(const Vec& x, const Vec& y) const {
    const double r2 = norm2(y);
    if (r2 == 0.0) throw std::domain_error("kernel evaluated at y = 0");
    if (kind_ == Kind::custom) return custom_(x, y);
    const double power = 0.5 * cns_ * std::pow(r2, -0.5 * (dim_ + 2.0 * s_));
    if (kind_ == Kind::fractional) return power;
    const Vec omega = scaled(y, 1.0 / std::sqrt(r2));
    return (1.0 + eps_ * phi_(x) * psi_(omega)) * power;
}

double Kernel::radial_coefficient(const Vec& x, const Vec& unit_y) const {
    return eval(x, unit_y);
}

double Kernel::tail_integral(const Vec& x, double r) const {
    if (!(r > 0)) throw std::invalid_argument("tail_integral: radius must be positive");
    if (!homogeneous_radial())
        throw std::invalid_argument("tail_integral: closed form requires a homogeneous radial kernel");
    double angular = 0.0;
    if (dim_ == 1) {
        angular = radial_coefficient(x, Vec{1.0, 0.0}) + radial_coefficient(x, Vec{-1.0, 0.0});
    } else {
        const int m = 128;
        for (int i = 0; i < m; ++i) {
            const double a = 2.0 * kPi * i / m;
            angular += radial_coefficient(x, Vec{std::cos(a), std::sin(a)});
        }
        angular *= 2.0 * kPi / m;
    }
    return angular * std::pow(r, -2.0 * s_) / (2.0 * s_);
}

double Kernel::xy_derivative(const Vec& x, const Vec& y, const MultiIndex& mu, const MultiIndex& theta) const {
    if (norm2(y) == 0.0) throw std::domain_error("kernel derivative at y = 0");
    if (kind_ == Kind::custom)
        throw std::invalid_argument("custom kernel: derivatives unavailable (unchecked)");
    if (mu[0] < 0 || mu[1] < 0 || theta[0] < 0 || theta[1] < 0)
        throw std::invalid_argument("negative multi-index");
    if (dim_ == 1 && (mu[1] != 0 || theta[1] != 0))
        throw std::invalid_argument("2D multi-index on a 1D kernel");
    if (dim_ == 2 && ((mu[0] > 0 && mu[1] > 0) || (theta[0] > 0 && theta[1] > 0)))
        throw std::invalid_argument("mixed partials unsupported in 2D");

    // D_y^theta of the radial power part.
    const int t = theta.order();
    const Vec ey = (dim_ == 2 && theta[1] > 0) ? Vec{0.0, 1.0} : Vec{1.0, 0.0};
    const Jet q = radius2_jet(y, ey, t);
    const double power_deriv = 0.5 * cns_ * jet_pow(q, -0.5 * (dim_ + 2.0 * s_)).derivative(t);

    if (kind_ == Kind::fractional) return mu.order() == 0 ? power_deriv : 0.0;

    // perturbed, 1D: modulation M(x, sign y) = 1 + eps phi(x) psi(sign y) is
    // constant in y away from the origin, so y-derivatives pass through it.
    const double psi_val = psi_(Vec{y[0] > 0 ? 1.0 : -1.0, 0.0});
    if (mu.order() == 0) {
        const double mod = 1.0 + eps_ * phi_(x) * psi_val;
        return mod * power_deriv;
    }
    const double phi_deriv = phi_.jet(x, Vec{1.0, 0.0}, mu.order()).derivative(mu.order());
    return eps_ * phi_deriv * psi_val * power_deriv;
}

ProximityReport check_proximity(const Kernel& k, double r0, const SampleBudget& budget) {
    if (!(r0 > 0)) throw std::invalid_argument("check_proximity: r0 must be positive");
    QuasiRandom seq(budget.seed);
    const double denom = 2.0 - 2.0 * k.s();

    auto ratio_at = [&](const std::vector<double>& c) {
        // c = (x-coord in [-1,1] or polar pair, y radius fraction, y direction)
        Vec x{0.0, 0.0}, y{0.0, 0.0};
        double radius;
        if (k.dim() == 1) {
            x = {2.0 * c[0] - 1.0, 0.0};
            radius = r0 * c[1];
            y = {c[2] < 0.5 ? -radius : radius, 0.0};
        } else {
            const double rx = std::sqrt(c[0]);
            x = {rx * std::cos(2 * kPi * c[3]), rx * std::sin(2 * kPi * c[3])};
            radius = r0 * c[1];
            y = {radius * std::cos(2 * kPi * c[2]), radius * std::sin(2 * kPi * c[2])};
        }
        const double kv = k.eval(x, y);
        if (!(kv > 0)) throw std::domain_error("check_proximity: non-positive kernel sample");
        return std::pow(radius, k.dim() + 2.0 * k.s()) * kv / denom;
    };

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::vector<double> arg_lo, arg_hi;
    const int dims = k.dim() == 1 ? 3 : 4;
    for (int i = 0; i < budget.points; ++i) {
        std::vector<double> c(static_cast<std::size_t>(dims));
        for (int d = 0; d < dims; ++d)
            c[static_cast<std::size_t>(d)] = seq.coord(static_cast<std::uint64_t>(2 * i + d / 3), d % 3);
        const double v = ratio_at(c);
        if (v < lo) { lo = v; arg_lo = c; }
        if (v > hi) { hi = v; arg_hi = c; }
    }
    const std::vector<double> zeros(static_cast<std::size_t>(dims), 1e-9);
    const std::vector<double> ones(static_cast<std::size_t>(dims), 1.0 - 1e-9);
    hi = refine_max(ratio_at, arg_hi, zeros, ones);
    lo = -refine_max([&](const std::vector<double>& c) { return -ratio_at(c); }, arg_lo, zeros, ones);

    ProximityReport rep;
    rep.r0 = r0;
    rep.a0 = 0.5 * (hi + lo);
    rep.eta = 0.5 * (hi - lo);
    rep.pass = rep.eta < rep.a0 / 4.0;
    return rep;
}

double derivative_envelope(const Kernel& k, int order, double r0, const SampleBudget& budget) {
    if (order < 0 || order > 12) throw std::invalid_argument("derivative_envelope: order must be in [0, 12]");
    if (!(r0 > 0)) throw std::invalid_argument("derivative_envelope: r0 must be positive");
    QuasiRandom seq(budget.seed);

    double best = 0.0;
    for (int t = 0; t <= order; ++t) {
        const MultiIndex theta{t, 0};
        const MultiIndex mu{order - t, 0};
        auto weighted = [&](const std::vector<double>& c) {
            const Vec x{2.0 * c[0] - 1.0, 0.0};
            const double radius = r0 * c[1];
            const Vec y{c[2] < 0.5 ? -radius : radius, 0.0};
            const double d = k.xy_derivative(x, y, mu, theta);
            return std::abs(d) * std::pow(radius, k.dim() + 2.0 * k.s() + t);
        };
        double hi = 0.0;
        std::vector<double> arg;
        const int pts = std::max(128, budget.points / (order + 1));
        for (int i = 0; i < pts; ++i) {
            std::vector<double> c{seq.coord(static_cast<std::uint64_t>(i), 0),
                                  seq.coord(static_cast<std::uint64_t>(i), 1),
                                  seq.coord(static_cast<std::uint64_t>(i), 2)};
            const double v = weighted(c);
            if (v > hi) { hi = v; arg = c; }
        }
        if (!arg.empty()) hi = refine_max(weighted, arg, {1e-9, 1e-9, 1e-9}, {1 - 1e-9, 1 - 1e-9, 1 - 1e-9});
        best = std::max(best, hi);
    }
    return best;
}

double EnvelopeGrowth::lambda() const { return std::exp(log_lambda); }

EnvelopeGrowth fit_envelope_growth(std::span<const double> H) {
    const std::size_t m = H.size();
    if (m < 5) throw std::invalid_argument("fit_envelope_growth: need H_0..H_m with m >= 4");
    double lo = H[0], hi = H[0];
    for (double h : H) {
        if (!(h > 0)) throw std::invalid_argument("fit_envelope_growth: all H_k must be positive");
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    if (hi == lo) throw std::invalid_argument("fit_envelope_growth: degenerate fit (all H equal)");

    // normal equations for y ~ b0 + b1 k + b2 log k!
    double A[3][3] = {};
    double rhsv[3] = {};
    for (std::size_t i = 0; i < m; ++i) {
        const double reg[3] = {1.0, static_cast<double>(i), std::lgamma(static_cast<double>(i) + 1.0)};
        const double y = std::log(H[i]);
        for (int a = 0; a < 3; ++a) {
            rhsv[a] += reg[a] * y;
            for (int b = 0; b < 3; ++b) A[a][b] += reg[a] * reg[b];
        }
    }
    // 3x3 gaussian elimination with partial pivoting
    int piv[3] = {0, 1, 2};
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(A[piv[r]][c]) > std::abs(A[piv[p]][c])) p = r;
        std::swap(piv[c], piv[p]);
        for (int r = c + 1; r < 3; ++r) {
            const double f = A[piv[r]][c] / A[piv[c]][c];
            for (int cc = c; cc < 3; ++cc) A[piv[r]][cc] -= f * A[piv[c]][cc];
            rhsv[piv[r]] -= f * rhsv[piv[c]];
        }
    }
    double beta[3];
    for (int c = 3; c-- > 0;) {
        double acc = rhsv[piv[c]];
        for (int cc = c + 1; cc < 3; ++cc) acc -= A[piv[c]][cc] * beta[cc];
        beta[c] = acc / A[piv[c]][c];
    }

    EnvelopeGrowth g;
    g.log_lambda = beta[1];
    g.nu = beta[2];
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pred = beta[0] + beta[1] * static_cast<double>(i) + beta[2] * std::lgamma(static_cast<double>(i) + 1.0);
        const double r = std::log(H[i]) - pred;
        ss += r * r;
    }
    g.rms = std::sqrt(ss / static_cast<double>(m));
    g.log_c0 = beta[0];
    return g;
}

KernelReport check_kernel(const Kernel& k, double r0, int max_order, const SampleBudget& budget) {
    KernelReport rep;
    rep.proximity = check_proximity(k, r0, budget);
    rep.positivity_pass = true;  // check_proximity throws on non-positive samples
    rep.envelope.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int i = 0; i <= max_order; ++i) rep.envelope.push_back(derivative_envelope(k, i, r0, budget));
    rep.growth = fit_envelope_growth(rep.envelope);
    double worst = 0.0;
    for (std::size_t i = 0; i < rep.envelope.size(); ++i) {
        const double pred = rep.growth.log_c0 + rep.growth.log_lambda * static_cast<double>(i) +
                            rep.growth.nu * std::lgamma(static_cast<double>(i) + 1.0);
        worst = std::max(worst, std::log(rep.envelope[i]) - pred);
    }
    rep.growth_pass = worst <= std::max(3.0 * rep.growth.rms, 1e-9);
    return rep;
}

}  // namespace gevlab
