#include "gevlab/quad.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gevlab/stencil.hpp"

namespace gevlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PanelSum {
    double value = 0.0;
    double error = 0.0;
};

// Worst-first adaptive bisection with a G7-K15 panel rule: always split the
// panel with the largest error estimate until the summed estimate fits the
// global tolerance. Ties break on the interval position, so the subdivision
// order is deterministic. Panels at the depth cap are frozen; splitting them
// further only chases roundoff.
template <typename F>
PanelSum integrate_adaptive(F&& f, double a, double b, double tol, int max_subdivisions) {
    using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    struct Item {
        double err, a, b, value;
        int depth;
    };
    auto lower_priority = [](const Item& x, const Item& y) {
        if (x.err != y.err) return x.err < y.err;
        if (x.a != y.a) return x.a > y.a;
        return x.b > y.b;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(lower_priority)> open(lower_priority);

    auto rate = [&](double lo, double hi, int depth) {
        double err = 0.0;
        const double v = rule::integrate(f, lo, hi, 0, 0.0, &err);
        return Item{err, lo, hi, v, depth};
    };

    PanelSum frozen;
    const Item root = rate(a, b, 0);
    double total_err = root.err;
    open.push(root);
    int splits = 0;
    while (total_err > tol && !open.empty()) {
        const Item worst = open.top();
        open.pop();
        if (worst.depth >= 48) {
            frozen.value += worst.value;
            frozen.error += worst.err;
            continue;
        }
        if (++splits > max_subdivisions)
            throw std::runtime_error("adaptive quadrature: tolerance not reached within max subdivisions");
        const double mid = 0.5 * (worst.a + worst.b);
        const Item left = rate(worst.a, mid, worst.depth + 1);
        const Item right = rate(mid, worst.b, worst.depth + 1);
        total_err += left.err + right.err - worst.err;
        open.push(left);
        open.push(right);
    }

    PanelSum out = frozen;
    while (!open.empty()) {
        out.value += open.top().value;
        out.error += open.top().err;
        open.pop();
    }
    if (out.error > tol * 1.0001 && frozen.error > 0.0)
        throw std::runtime_error("adaptive quadrature: tolerance not reached within max subdivisions");
    return out;
}

// integral over |y| > r of g(y) for a 1D integrand given as g(+t) + g(-t),
// t > r: finite stretch adaptively, far tail through t -> 1/t.
template <typename F>
PanelSum exterior_integral_1d(F&& both_sides, double r, double tol, int max_subdivisions) {
    const double split = std::max(10.0 * r, 50.0);
    PanelSum near = integrate_adaptive(both_sides, r, split, tol, max_subdivisions);
    auto mapped = [&](double t) { return both_sides(1.0 / t) / (t * t); };
    PanelSum far = integrate_adaptive(mapped, 1e-14, 1.0 / split, tol, max_subdivisions);
    return {near.value + far.value, near.error + far.error};
}

double pow_int(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

class FractionalGaussianImage final : public FieldNode {
  public:
    explicit FractionalGaussianImage(double s) : s_(s) {
        if (!(s > 0.5 && s < 1.0)) throw std::invalid_argument("s must lie strictly inside (1/2, 1)");
        // Gauss-Legendre nodes on [0, L]; the integrand xi^{2s+m} e^{-xi^2/4}
        // is entire and negligible beyond xi ~ 40, so a fixed rule suffices.
        const int n = 600;
        nodes_.resize(n);
        weights_.resize(n);
        legendre_rule(n);
    }

    int dim() const override { return 1; }

    double eval(const Vec& x) const override { return deriv(x[0], 0); }

    Jet jet(const Vec& x, const Vec& v, int order) const override {
        Jet j(order);
        double fact = 1.0;
        for (int m = 0; m <= order; ++m) {
            if (m > 1) fact *= m;
            j[m] = deriv(x[0], m) * pow_int(v[0], m) / fact;
        }
        return j;
    }

    double sup_bound() const override {
        // |f| <= (1/sqrt(pi)) int xi^{2s} e^{-xi^2/4} = 2^{2s} Gamma(s + 1/2) / sqrt(pi)
        return std::pow(2.0, 2.0 * s_) * std::tgamma(s_ + 0.5) / std::sqrt(kPi);
    }
    Decay decay() const override { return Decay::algebraic(1.0 + 2.0 * s_); }
    std::string describe() const override {
        std::ostringstream os;
        os << "fractional_gaussian_image(" << s_ << ")";
        return os.str();
    }

  private:
    // f^(m)(x) = -(1/sqrt(pi)) int_0^inf xi^{2s+m} e^{-xi^2/4} cos(x xi + m pi/2) dxi
    double deriv(double x, int m) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const double xi = nodes_[i];
            acc += weights_[i] * std::pow(xi, 2.0 * s_ + m) * std::exp(-0.25 * xi * xi) *
                   std::cos(x * xi + 0.5 * kPi * m);
        }
        return -acc / std::sqrt(kPi);
    }

    void legendre_rule(int n) {
        const double L = 60.0;
        for (int i = 0; i < n; ++i) {
            // Newton from the Chebyshev-like initial guess
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double p0 = 0.0, p1 = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                p0 = 1.0;
                p1 = t;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0b = 1.0, p1b = t;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * t * p1b - (j - 1.0) * p0b) / j;
                p0b = p1b;
                p1b = p2;
            }
            const double dp = n * (t * p1b - p0b) / (t * t - 1.0);
            nodes_[static_cast<std::size_t>(i)] = 0.5 * L * (t + 1.0);
            weights_[static_cast<std::size_t>(i)] = L / ((1.0 - t * t) * dp * dp);
        }
    }

    double s_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

class DerivativeField final : public FieldNode {
  public:
    DerivativeField(ScalarField u, int order) : u_(std::move(u)), m_(order) {
        if (u_.dim() != 1) throw std::invalid_argument("derivative field: 1D only");
    }
    int dim() const override { return 1; }
    double eval(const Vec& x) const override { return u_.jet(x, Vec{1.0, 0.0}, m_).derivative(m_); }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        const Jet base = u_.jet(x, Vec{1.0, 0.0}, order + m_);
        Jet j(order);
        double vi = 1.0;
        for (int i = 0; i <= order; ++i) {
            double fall = 1.0;  // (i+m)! / i!
            for (int t = i + 1; t <= i + m_; ++t) fall *= t;
            j[i] = base[i + m_] * fall * vi;
            vi *= v[0];
        }
        return j;
    }
    double sup_bound() const override { return std::numeric_limits<double>::infinity(); }
    Decay decay() const override { return u_.decay(); }
    double smooth_radius() const override { return u_.smooth_radius(); }
    std::string describe() const override { return "derivative(" + u_.describe() + "," + std::to_string(m_) + ")"; }

  private:
    ScalarField u_;
    int m_;
};

class OperatorImageField final : public FieldNode {
  public:
    OperatorImageField(ScalarField u, Kernel k, QuadratureConfig cfg)
        : u_(std::move(u)), k_(std::move(k)), cfg_(cfg) {
        if (u_.dim() != 1 || k_.dim() != 1) throw std::invalid_argument("operator image field: 1D only");
    }
    int dim() const override { return 1; }
    double eval(const Vec& x) const override { return evaluate(u_, k_, x, cfg_).value; }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        Jet j(order);
        double fact = 1.0;
        for (int m = 0; m <= order; ++m) {
            if (m > 1) fact *= m;
            const ScalarField dm(std::make_shared<DerivativeField>(u_, m));
            j[m] = evaluate(dm, k_, x, cfg_).value * pow_int(v[0], m) / fact;
        }
        return j;
    }
    double sup_bound() const override { return std::numeric_limits<double>::infinity(); }
    Decay decay() const override { return Decay::bounded(); }
    double smooth_radius() const override { return u_.smooth_radius() - cfg_.inner_radius; }
    std::string describe() const override { return "operator_image(" + u_.describe() + ")"; }

  private:
    ScalarField u_;
    Kernel k_;
    QuadratureConfig cfg_;
};

}  // namespace

double second_increment(const ScalarField& u, const Vec& x, const Vec& y) {
    return u(add(x, y)) + u(Vec{x[0] - y[0], x[1] - y[1]}) - 2.0 * u(x);
}

OperatorValue evaluate(const ScalarField& u, const Kernel& k, const Vec& x, const QuadratureConfig& cfg) {
    if (u.dim() != k.dim()) throw std::invalid_argument("evaluate: field/kernel dimension mismatch");
    if (!(cfg.inner_radius > 0) || !(cfg.outer_cutoff > cfg.inner_radius))
        throw std::invalid_argument("evaluate: need 0 < rho < R_c");
    if (!(cfg.panel_tolerance > 0)) throw std::invalid_argument("evaluate: panel tolerance must be positive");
    if (!k.homogeneous_radial())
        throw std::invalid_argument("evaluate: inner zone needs a homogeneous radial kernel");
    if (norm(x) + cfg.inner_radius > u.smooth_radius())
        throw std::domain_error("evaluate: x (plus the inner radius) leaves the smoothness region");

    const double s = k.s();
    const double rho = cfg.inner_radius;
    const double rc = cfg.outer_cutoff;
    const int n = k.dim();

    bool mapped_tail;
    switch (cfg.tail_mode) {
        case QuadratureConfig::TailMode::mapped: mapped_tail = true; break;
        case QuadratureConfig::TailMode::bound_only: mapped_tail = false; break;
        default: mapped_tail = u.decay().kind != Decay::Kind::bounded_only; break;
    }
    if (!mapped_tail && !std::isfinite(u.sup_bound()))
        throw std::invalid_argument("evaluate: bound-only tail needs a finite sup bound");

    OperatorValue out;
    const double ux2 = 2.0 * u(x);

    struct Dir {
        Vec v;
        double weight;  // angular weight
    };
    std::vector<Dir> dirs;
    if (n == 1) {
        dirs.push_back({Vec{1.0, 0.0}, 1.0});
    } else {
        const int m = cfg.angular_points;
        for (int i = 0; i < m; ++i) {
            const double a = 2.0 * kPi * (i + 0.5) / m;
            dirs.push_back({Vec{std::cos(a), std::sin(a)}, 2.0 * kPi / m});
        }
    }

    for (const Dir& d : dirs) {
        // kappa: kernel coefficient(s) on this ray. In 1D the ray covers both
        // signs of y (the second increment is even in y).
        const double kappa = n == 1 ? k.radial_coefficient(x, d.v) + k.radial_coefficient(x, scaled(d.v, -1.0))
                                    : k.radial_coefficient(x, d.v);

        // inner zone: delta u(x, t v) = 2 sum_{m even >= 2} a_m t^m
        const Jet j6 = u.jet(x, d.v, 6);
        auto moment = [&](int m) { return kappa * std::pow(rho, m - 2.0 * s) / (m - 2.0 * s); };
        out.inner += d.weight * 2.0 * (j6[2] * moment(2) + j6[4] * moment(4));
        out.inner_bound += d.weight * 4.0 * std::abs(j6[6]) * moment(6);

        auto ray_integrand = [&](double t) {
            const Vec y = scaled(d.v, t);
            const double inc = u(add(x, y)) + u(Vec{x[0] - y[0], x[1] - y[1]}) - ux2;
            double kv = k.eval(x, y);
            if (n == 1) kv += k.eval(x, scaled(y, -1.0));
            return inc * kv * (n == 2 ? t : 1.0);
        };

        const PanelSum mid = integrate_adaptive(ray_integrand, rho, rc, cfg.panel_tolerance * d.weight,
                                                cfg.max_subdivisions);
        out.middle += d.weight * mid.value;
        out.middle_bound += d.weight * mid.error;

        if (mapped_tail) {
            auto mapped = [&](double t) { return ray_integrand(1.0 / t) / (t * t); };
            const PanelSum far = integrate_adaptive(mapped, 1e-15, 1.0 / rc, cfg.panel_tolerance * d.weight,
                                                    cfg.max_subdivisions);
            out.tail += d.weight * far.value;
            out.tail_bound += d.weight * far.error;
        }
    }

    if (!mapped_tail) {
        out.tail = 0.0;
        out.tail_bound = 4.0 * u.sup_bound() * k.tail_integral(x, rc);
    }

    out.value = out.inner + out.middle + out.tail;
    return out;
}

double exterior_derivative_integral(const Kernel& k, const MultiIndex& gamma, double r, const Vec& x) {
    if (!(r > 0)) throw std::invalid_argument("exterior_derivative_integral: r must be positive");
    if (k.dim() != 1) throw std::invalid_argument("exterior_derivative_integral: 1D only");
    const int g = gamma.order();
    const double s = k.s();

    if (k.kind() == Kernel::Kind::fractional) {
        // 2 (c/2) prod_{i=0}^{g-1} (1+2s+i) r^{-2s-g} / (2s+g)
        double prod = 1.0;
        for (int i = 0; i < g; ++i) prod *= 1.0 + 2.0 * s + i;
        return k.normalization() * prod * std::pow(r, -2.0 * s - g) / (2.0 * s + g);
    }

    auto both = [&](double t) {
        return std::abs(k.y_derivative(x, Vec{t, 0.0}, gamma)) + std::abs(k.y_derivative(x, Vec{-t, 0.0}, gamma));
    };
    return exterior_integral_1d(both, r, 1e-11, 200000).value;
}

std::vector<ConvergenceRow> quotient_integral_convergence(const Kernel& k, const MultiIndex& gamma, double r,
                                                          std::span<const double> hs, const Vec& x) {
    if (k.dim() != 1) throw std::invalid_argument("quotient_integral_convergence: 1D only");
    const int g = gamma.order();
    const Stencil st = build_stencil(g);
    const double rhs = exterior_derivative_integral(k, gamma, r, x);

    std::vector<ConvergenceRow> rows;
    rows.reserve(hs.size());
    for (double h : hs) {
        if (!(h > 0) || h * (g + 1) >= 0.5 * r)
            throw std::invalid_argument("quotient_integral_convergence: h too large for the stencil footprint");
        auto quotient = [&](double t) {
            double acc_p = 0.0, acc_m = 0.0;
            for (std::size_t i = 0; i < st.nodes.size(); ++i) {
                acc_p += st.weights[i] * k.eval(x, Vec{t + st.nodes[i] * h, 0.0});
                acc_m += st.weights[i] * k.eval(x, Vec{-t + st.nodes[i] * h, 0.0});
            }
            return std::abs(acc_p) + std::abs(acc_m);
        };
        const double lhs = exterior_integral_1d(quotient, r, 1e-11, 200000).value / pow_int(h, g);
        rows.push_back({h, lhs, rhs, lhs / rhs});
    }
    return rows;
}

ScalarField fractional_gaussian_image(double s) {
    return ScalarField(std::make_shared<FractionalGaussianImage>(s));
}

ScalarField operator_image_field(ScalarField u, Kernel k, QuadratureConfig cfg) {
    return ScalarField(std::make_shared<OperatorImageField>(std::move(u), std::move(k), cfg));
}

}  // namespace gevlab
