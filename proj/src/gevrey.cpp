#include "gevlab/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gevlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// sup over a spatial grid on [-r, r] of |D^m u| for every m <= m_max at once.
std::vector<double> grid_derivative_sups(const ScalarField& u, double r, int m_max, int points) {
    std::vector<double> sup(static_cast<std::size_t>(m_max) + 1, 0.0);
    for (int i = 0; i < points; ++i) {
        const double x = points == 1 ? 0.0 : -r + 2.0 * r * i / (points - 1);
        const Jet j = u.jet(vec1(x), Vec{1.0, 0.0}, m_max);
        double fact = 1.0;
        for (int m = 0; m <= m_max; ++m) {
            if (m > 1) fact *= m;
            sup[static_cast<std::size_t>(m)] = std::max(sup[static_cast<std::size_t>(m)], std::abs(j[m]) * fact);
        }
    }
    return sup;
}

// One golden-section pass maximizing a scalar function of r on [lo, hi].
template <typename F>
double golden_refine(F&& f, double lo, double hi, double best) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int iter = 0; iter < 24; ++iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        best = std::max(best, std::max(fc, fd));
    }
    return best;
}

struct FitResult {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    double rms = 0.0, max_dev = 0.0;
};

// least squares of y on (1, p, log p!) over the given points
FitResult fit_log_law(const std::vector<std::pair<int, double>>& pts, bool fix_b2, double b2_fixed) {
    const std::size_t n = pts.size();
    double A[3][3] = {};
    double rhs[3] = {};
    for (const auto& [p, y0] : pts) {
        const double lgf = std::lgamma(static_cast<double>(p) + 1.0);
        const double y = fix_b2 ? y0 - b2_fixed * lgf : y0;
        const double reg[3] = {1.0, static_cast<double>(p), lgf};
        const int dims = fix_b2 ? 2 : 3;
        for (int a = 0; a < dims; ++a) {
            rhs[a] += reg[a] * y;
            for (int b = 0; b < dims; ++b) A[a][b] += reg[a] * reg[b];
        }
    }
    const int dims = fix_b2 ? 2 : 3;
    // tiny gaussian elimination
    double mat[3][4];
    for (int i = 0; i < dims; ++i) {
        for (int j = 0; j < dims; ++j) mat[i][j] = A[i][j];
        mat[i][dims] = rhs[i];
    }
    for (int c = 0; c < dims; ++c) {
        int piv = c;
        for (int r = c + 1; r < dims; ++r)
            if (std::abs(mat[r][c]) > std::abs(mat[piv][c])) piv = r;
        std::swap(mat[c], mat[piv]);
        for (int r = 0; r < dims; ++r) {
            if (r == c || mat[r][c] == 0.0) continue;
            const double f = mat[r][c] / mat[c][c];
            for (int cc = c; cc <= dims; ++cc) mat[r][cc] -= f * mat[c][cc];
        }
    }
    FitResult out;
    out.b0 = mat[0][dims] / mat[0][0];
    out.b1 = dims > 1 ? mat[1][dims] / mat[1][1] : 0.0;
    out.b2 = fix_b2 ? b2_fixed : mat[2][dims] / mat[2][2];

    double ss = 0.0;
    out.max_dev = kNegInf;
    for (const auto& [p, y] : pts) {
        const double pred = out.b0 + out.b1 * p + out.b2 * std::lgamma(static_cast<double>(p) + 1.0);
        const double res = y - pred;
        ss += res * res;
        out.max_dev = std::max(out.max_dev, res);
    }
    out.rms = std::sqrt(ss / static_cast<double>(n));
    out.max_dev = std::max(out.max_dev, 0.0);
    return out;
}

double log_weight_factorial(int p) {
    // log [p!] with [p!] = 1 for p < 0
    return p >= 0 ? std::lgamma(static_cast<double>(p) + 1.0) : 0.0;
}

}  // namespace

NormLadder ladder(const ScalarField& u, const ScalarField& f, double R, double s, int p_max,
                  const LadderConfig& cfg) {
    if (!(R > 0) || R > 5.0) throw std::invalid_argument("ladder: need 0 < R <= 5");
    if (p_max < 0 || p_max > 18) throw std::invalid_argument("ladder: p_max must be in [0, 18]");
    if (u.dim() != 1) throw std::invalid_argument("ladder: 1D fields only");
    if (cfg.r_points < 2 || cfg.spatial_points < 2) throw std::invalid_argument("ladder: degenerate grids");

    NormLadder lad;
    lad.R = R;
    lad.s = s;
    lad.p_max = p_max;
    lad.r_points = cfg.r_points;
    lad.spatial_points = cfg.spatial_points;
    lad.nstar.assign(static_cast<std::size_t>(p_max) + 3, 0.0);
    if (f.valid()) lad.msf.assign(static_cast<std::size_t>(p_max) + 1, 0.0);

    const int mu = p_max + 2;
    const int mf = p_max + 1;

    std::vector<double> rs(static_cast<std::size_t>(cfg.r_points));
    for (int i = 0; i < cfg.r_points; ++i)
        rs[static_cast<std::size_t>(i)] = R / 2 + (i + 1) * (R / 2) / (cfg.r_points + 1);

    std::vector<std::vector<double>> su(rs.size()), sf(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        su[i] = grid_derivative_sups(u, rs[i], mu, cfg.spatial_points);
        if (f.valid()) sf[i] = grid_derivative_sups(f, rs[i], mf, cfg.spatial_points);
    }

    auto weighted_max = [&](int m, double expo, const std::vector<std::vector<double>>& sups,
                            const ScalarField& field) {
        double best = 0.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const double v = std::pow(R - rs[i], expo) * sups[i][static_cast<std::size_t>(m)];
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        if (cfg.refine_r && best > 0.0) {
            const double lo = arg == 0 ? R / 2 : rs[arg - 1];
            const double hi = arg + 1 == rs.size() ? R : rs[arg + 1];
            best = golden_refine(
                [&](double r) {
                    return std::pow(R - r, expo) * grid_derivative_sups(field, r, m, cfg.spatial_points)
                        [static_cast<std::size_t>(m)];
                },
                lo, hi, best);
        }
        return best;
    };

    for (int p = -2; p <= p_max; ++p)
        lad.nstar[static_cast<std::size_t>(p + 2)] = weighted_max(p + 2, p + 2.0, su, u);
    if (f.valid())
        for (int p = 0; p <= p_max; ++p)
            lad.msf[static_cast<std::size_t>(p)] = weighted_max(p + 1, 2.0 * s + p + 1.0, sf, f);
    return lad;
}

double check_key(const NormLadder& lad, double V, double Gamma, double sigma) {
    if (!(V > 0) || !(Gamma > 0)) throw std::invalid_argument("check_key: V, Gamma must be positive");
    if (sigma < 1.0) throw std::invalid_argument("check_key: sigma must be >= 1");
    double worst = std::numeric_limits<double>::infinity();
    for (int p = -2; p <= lad.p_max; ++p) {
        const double n = lad.nstar_at(p);
        if (n <= 0.0) continue;
        const double bound_log = std::log(V) + p * std::log(Gamma) + sigma * log_weight_factorial(p);
        worst = std::min(worst, bound_log - std::log(n));
    }
    return worst;
}

GevreyFit fit_gevrey(const NormLadder& lad, int p_lo, int p_hi) {
    if (p_lo < -2 || p_hi > lad.p_max || p_lo > p_hi) throw std::invalid_argument("fit_gevrey: bad p range");
    std::vector<std::pair<int, double>> pts;
    double max_entry = 0.0;
    for (int p = p_lo; p <= p_hi; ++p) {
        const double n = lad.nstar_at(p);
        max_entry = std::max(max_entry, n);
        if (n > 0.0 && p >= 0) pts.emplace_back(p, std::log(n));
    }

    GevreyFit fit;
    fit.p_lo = p_lo;
    fit.p_hi = p_hi;
    if (pts.size() < 5) {
        // polynomial-type data: derivatives vanish beyond a finite order
        fit.finitely_supported = true;
        fit.sigma = 1.0;
        fit.log_gamma = 0.0;
        fit.log_v = max_entry > 0.0 ? std::log(max_entry) : 0.0;
        fit.rms = 0.0;
        fit.max_dev = 0.0;
        return fit;
    }

    FitResult res = fit_log_law(pts, false, 0.0);
    fit.sigma = res.b2;
    if (fit.sigma < 1.0) {
        fit.sigma = 1.0;
        fit.clamped = true;
        res = fit_log_law(pts, true, 1.0);
    }
    fit.log_v = res.b0;
    fit.log_gamma = res.b1;
    fit.rms = res.rms;
    fit.max_dev = res.max_dev;
    return fit;
}

double delta_schedule(double R, double r, int p) {
    if (p < 1) throw std::invalid_argument("delta_schedule: undefined for p < 1; supply delta explicitly");
    if (!(r > R / 2) || !(r < R)) throw std::invalid_argument("delta_schedule: need R/2 < r < R");
    return (R - r) / p;
}

AprioriResult verify_apriori(const ScalarField& u, const ScalarField& f, double s, double r, double delta, int p,
                             std::span<const double> H, double u_sup, int spatial_points) {
    if (!(delta > 0) || !(r > 0) || r + delta >= 5.0)
        throw std::invalid_argument("verify_apriori: need 0 < r < r + delta < 5");
    if (p < 0) throw std::invalid_argument("verify_apriori: p must be >= 0");
    if (static_cast<int>(H.size()) < p + 2)
        throw std::invalid_argument("verify_apriori: H list must reach order p + 1");

    const auto su_r = grid_derivative_sups(u, r, p + 2, spatial_points);
    const auto su_rd = grid_derivative_sups(u, r + delta, p + 2, spatial_points);
    const auto sf_rd = grid_derivative_sups(f, r + delta, p + 1, spatial_points);

    AprioriResult out;
    out.lhs = su_r[static_cast<std::size_t>(p + 2)];
    out.bracket = su_rd[static_cast<std::size_t>(p + 1)] / delta + su_rd[static_cast<std::size_t>(p)] / (delta * delta) +
                  std::pow(delta, 2.0 * s - 1.0) * sf_rd[static_cast<std::size_t>(p + 1)] +
                  H[static_cast<std::size_t>(p + 1)] * std::pow(2.0, p) * std::pow(delta, -(p + 2.0)) * u_sup;
    out.ratio = out.bracket > 0.0 ? out.lhs / out.bracket : 0.0;
    return out;
}

StepResult verify_step(const NormLadder& lad, int p, double E, double F, std::span<const double> H, double u_sup) {
    if (p < 1 || p > lad.p_max) throw std::invalid_argument("verify_step: p out of ladder range");
    if (!lad.has_f()) throw std::invalid_argument("verify_step: ladder lacks the f side");
    if (static_cast<int>(H.size()) < p + 2) throw std::invalid_argument("verify_step: H list must reach order p + 1");

    StepResult out;
    out.lhs = lad.nstar_at(p);
    double pfact = 1.0;
    for (int i = 2; i <= p; ++i) pfact *= i;
    out.rhs = E * (p * lad.nstar_at(p - 1) + static_cast<double>(p) * (p - 1) * lad.nstar_at(p - 2) + lad.msf_at(p) +
                   std::pow(F, p) * H[static_cast<std::size_t>(p + 1)] * pfact * u_sup);
    out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

double closure_bracket(const InductionConstants& c, double Gamma, double V, int p) {
    const double lg = std::log(Gamma);
    const double t1 = 1.0 / Gamma;
    const double t2 = 1.0 / (Gamma * Gamma);
    double t3 = 0.0;
    if (c.u_sup > 0.0 && c.F > 0.0)
        t3 = std::exp(p * (std::log(c.F) - lg)) * c.u_sup / V;
    double t4 = 0.0;
    if (c.L > 0.0 && c.A > 0.0)
        t4 = std::exp(std::log(c.L) - std::log(V) - p * lg + 2.0 * c.s * std::log(c.R / 2.0) +
                      (p + 1.0) * std::log(c.A / 2.0) + c.tau * std::log(p + 1.0));
    return c.E * (t1 + t2 + t3 + t4);
}

ClosureResult induction_closure(const InductionConstants& c, int p_check) {
    if (c.sigma < std::max(1.0 + c.nu, c.tau) - 1e-12)
        throw std::invalid_argument("induction_closure: sigma must be >= max(1 + nu, tau)");
    if (p_check < 1) throw std::invalid_argument("induction_closure: p_check must be >= 1");

    const double V = 1.0;
    auto feasible_at = [&](double g) {
        for (int p = 1; p <= p_check; ++p)
            if (!(closure_bracket(c, g, V, p) <= 1.0)) return false;
        // asymptotic: the p-dependent terms must decay geometrically
        if (c.u_sup > 0.0 && !(g > c.F)) return false;
        if (c.L > 0.0 && !(g > c.A / 2.0)) return false;
        return true;
    };

    double hi = 1.0;
    int doublings = 0;
    while (!feasible_at(hi)) {
        hi *= 2.0;
        if (++doublings > 60) return {hi, V, false};  // infeasible at budget
    }
    double lo = hi / 2.0;
    for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (feasible_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {hi, V, true};
}

SourceEnvelope fit_source_envelope(const ScalarField& f, double R, int p_max, int spatial_points) {
    if (p_max < 4) throw std::invalid_argument("fit_source_envelope: need p_max >= 4");
    const auto sups = grid_derivative_sups(f, R, p_max, spatial_points);
    std::vector<std::pair<int, double>> pts;
    for (int p = 0; p <= p_max; ++p)
        if (sups[static_cast<std::size_t>(p)] > 0.0) pts.emplace_back(p, std::log(sups[static_cast<std::size_t>(p)]));
    SourceEnvelope env;
    if (pts.size() < 3) {
        env.L = std::max(sups[0], 1e-300);
        env.A = R;
        env.tau = 0.0;
        return env;
    }
    FitResult res = fit_log_law(pts, false, 0.0);
    if (res.b2 < 0.0) res = fit_log_law(pts, true, 0.0);
    env.tau = std::max(res.b2, 0.0);
    env.A = R * std::exp(res.b1);
    // absorb the worst positive deviation so the envelope majorizes the data
    double max_dev = 0.0;
    for (const auto& [p, y] : pts) {
        const double pred = res.b0 + res.b1 * p + res.b2 * std::lgamma(static_cast<double>(p) + 1.0);
        max_dev = std::max(max_dev, y - pred);
    }
    env.L = std::exp(res.b0 + max_dev);
    return env;
}

}  // namespace gevlab
