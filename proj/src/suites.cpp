#include "gevlab/suites.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gevlab/field.hpp"
#include "gevlab/gevrey.hpp"
#include "gevlab/json_io.hpp"
#include "gevlab/kernel.hpp"
#include "gevlab/quad.hpp"
#include "gevlab/stencil.hpp"
#include "gevlab/version.hpp"

namespace gevlab::suites {

namespace {

using clock = std::chrono::steady_clock;

struct Timer {
    clock::time_point t0 = clock::now();
    double seconds() const { return std::chrono::duration<double>(clock::now() - t0).count(); }
};

double closed_envelope(double s, int k) {
    // (c/2) Gamma(1+2s+k) / Gamma(1+2s), n = 1
    const double c = fractional_normalization(1, s);
    return 0.5 * c * std::exp(std::lgamma(1.0 + 2.0 * s + k) - std::lgamma(1.0 + 2.0 * s));
}

std::vector<double> closed_envelope_list(double s, int kmax) {
    std::vector<double> H;
    H.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) H.push_back(closed_envelope(s, k));
    return H;
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::pair<ScalarField, ScalarField> trig_pair(double omega, double s) {
    // exact manufactured pair: u = cos(omega x), f = Lu = -omega^{2s} cos(omega x)
    return {trig_field(omega, 0.0), scale_field(-std::pow(omega, 2.0 * s), trig_field(omega, 0.0))};
}

struct CsvBuilder {
    std::ostringstream os;
    explicit CsvBuilder(const std::string& header) { os << header << "\n"; }
    template <typename... Ts>
    void row(Ts... vals) {
        bool first = true;
        ((os << (first ? "" : ","), os << cell(vals), first = false), ...);
        os << "\n";
    }
    static std::string cell(double v) { return format_double(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    std::string str() const { return os.str(); }
};

struct StepCalibration {
    double E = 0.0;
    double F = 1.0;
    std::vector<NormLadder> trig_ladders;  // omega = 1, 2
};

StepCalibration calibrate_step(double s, const std::vector<double>& H) {
    StepCalibration cal;
    const EnvelopeGrowth g = fit_envelope_growth(std::span<const double>(H.data(), 12));
    cal.F = std::max(1.0, g.lambda());
    const LadderConfig lcfg{33, 257, true};
    for (double omega : {1.0, 2.0}) {
        auto [u, f] = trig_pair(omega, s);
        cal.trig_ladders.push_back(ladder(u, f, 2.0, s, 10, lcfg));
    }
    for (const NormLadder& lad : cal.trig_ladders) {
        for (int p = 1; p <= 10; ++p) {
            const StepResult r = verify_step(lad, p, 1.0, cal.F, H, 1.0);
            cal.E = std::max(cal.E, r.ratio);
        }
    }
    return cal;
}

}  // namespace

bool Group::pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

Check& Group::add(std::string name, bool pass, double value, double threshold, std::string detail) {
    checks.push_back({std::move(name), pass, value, threshold, std::move(detail)});
    return checks.back();
}

Group stencil_exactness() {
    Timer t;
    Group g{"stencil-exactness"};
    bool all = true;
    std::string bad;
    for (int k = 0; k <= 12; ++k) {
        const Stencil st = build_stencil(k);
        BigInt kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        for (int m = 1; m <= k + 1; ++m) {
            Rational acc = 0;
            for (std::size_t i = 0; i < st.nodes.size(); ++i) {
                BigInt p = 1;
                for (int e = 0; e < m - 1; ++e) p *= st.nodes[i];
                acc += st.coefficients[i] * Rational(p);
            }
            const Rational want = (m == k + 1) ? Rational(kfact) : Rational(0);
            if (acc != want) {
                all = false;
                bad = "k=" + std::to_string(k) + " m=" + std::to_string(m);
            }
        }
    }
    g.add("moment-conditions-exact", all, all ? 0.0 : 1.0, 0.0, all ? "k = 0..12, exact rational equality" : bad);

    // annihilation of monomials below the order, normalization at the order
    bool annih = true;
    for (int k = 1; k <= 12 && annih; ++k) {
        const Stencil st = build_stencil(k);
        BigInt kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        for (int d = 0; d <= k; ++d) {
            Rational acc = 0;
            for (std::size_t i = 0; i < st.nodes.size(); ++i) {
                BigInt p = 1;
                for (int e = 0; e < d; ++e) p *= st.nodes[i];
                acc += st.coefficients[i] * Rational(p);
            }
            annih = annih && (acc == (d == k ? Rational(kfact) : Rational(0)));
        }
    }
    g.add("annihilation-exact", annih, annih ? 0.0 : 1.0, 0.0, "monomials of degree < k vanish, degree k gives k!");
    g.seconds = t.seconds();
    return g;
}

Group quotient_convergence() {
    Timer t;
    Group g{"quotient-convergence"};
    struct Case {
        const char* name;
        ScalarField u;
        double x;
    };
    const std::vector<Case> cases{{"exp", exp_field(1.0), 0.0}, {"cos", trig_field(1.0, 0.0), 0.3},
                                  {"gaussian", gaussian_field(1.0), 0.8}};
    CsvBuilder csv("field,k,h,error");
    for (const Case& c : cases) {
        for (int k = 1; k <= 6; ++k) {
            int e_lo = 3;
            if (k == 4) e_lo = 2;
            if (k == 6) e_lo = 1;
            std::vector<double> lh, le;
            const Jet j = c.u.jet(vec1(c.x), Vec{1.0, 0.0}, k);
            const double exact = j.derivative(k);
            for (int e = e_lo; e <= e_lo + 5; ++e) {
                const double h = std::pow(2.0, -e);
                const double err = std::abs(derivative_estimate(c.u, vec1(c.x), k, Vec{1.0, 0.0}, h) - exact);
                lh.push_back(std::log(h));
                le.push_back(std::log(std::max(err, 1e-300)));
                csv.row(c.name, k, h, err);
            }
            const double slope = lsq_slope(lh, le);
            g.add(std::string("order-") + c.name + "-k" + std::to_string(k), slope >= 0.9, slope, 0.9);
        }
    }
    g.tables["quotient_convergence.csv"] = csv.str();
    g.seconds = t.seconds();
    return g;
}

Group discrete_identities(std::uint64_t seed) {
    Timer t;
    Group g{"discrete-identities"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-1.0, 1.0), uh(1e-3, 1e-1), uw(0.5, 2.0);

    auto random_field = [&]() -> ScalarField {
        switch (rng() % 4) {
            case 0: return trig_field(uw(rng), ux(rng));
            case 1: return gaussian_field(uw(rng));
            case 2: return lorentzian_field();
            default: return polynomial_field({ux(rng), ux(rng), ux(rng), ux(rng)});
        }
    };

    double worst_leibniz = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ScalarField f = random_field(), q = random_field();
        const Vec x = vec1(ux(rng));
        const double h = uh(rng);
        const LeibnizSides sides = leibniz_split(f, q, x, h, Vec{1.0, 0.0});
        const double scale = std::max({1e-300, std::abs(sides.lhs), std::abs(sides.rhs),
                                       std::abs(f(x)) * std::abs(q(x))});
        worst_leibniz = std::max(worst_leibniz, std::abs(sides.lhs - sides.rhs) / scale);
    }
    g.add("leibniz-residual", worst_leibniz <= 1e-10, worst_leibniz, 1e-10, "100 randomized cases");

    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst_sbp = 0.0;
    for (int i = 0; i < 100; ++i) {
        std::vector<double> f(64), q(65);
        for (double& v : f) v = gauss(rng);
        for (double& v : q) v = gauss(rng);
        const double h = uh(rng);
        const double res = summation_by_parts_residual(f, q, h);
        double scale = 1e-300;
        for (std::size_t j = 0; j < f.size(); ++j) scale += std::abs(f[j] * q[j + 1]);
        worst_sbp = std::max(worst_sbp, res / scale);
    }
    g.add("summation-by-parts-residual", worst_sbp <= 1e-10, worst_sbp, 1e-10, "100 randomized 64-point windows");
    g.seconds = t.seconds();
    return g;
}

Group kernel_homogeneity(std::uint64_t seed) {
    Timer t;
    Group g{"kernel-homogeneity"};
    const double s = 0.75;
    const Kernel k = fractional_kernel(1, s);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ulog(std::log(0.1), std::log(10.0)), ulam(std::log(0.25), std::log(4.0));

    double worst = 0.0;
    for (int theta = 0; theta <= 8; ++theta) {
        for (int i = 0; i < 100; ++i) {
            const double y = std::exp(ulog(rng)) * (rng() % 2 ? 1.0 : -1.0);
            const double lam = std::exp(ulam(rng));
            const double d1 = k.y_derivative(vec1(0.0), vec1(lam * y), MultiIndex{theta, 0});
            const double d0 = k.y_derivative(vec1(0.0), vec1(y), MultiIndex{theta, 0});
            const double want = std::pow(lam, -(1.0 + 2.0 * s + theta)) * d0;
            worst = std::max(worst, std::abs(d1 - want) / std::abs(want));
        }
    }
    g.add("derivative-homogeneity", worst <= 1e-12, worst, 1e-12, "orders 0..8, 100 scaling pairs each");
    g.seconds = t.seconds();
    return g;
}

Group envelope_growth_fit(std::uint64_t seed) {
    Timer t;
    Group g{"envelope-growth"};
    const double s = 0.75;
    const Kernel k = fractional_kernel(1, s);
    const SampleBudget budget{4096, seed};

    std::vector<double> H;
    double worst_rel = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double sampled = derivative_envelope(k, i, 0.5, budget);
        const double closed = closed_envelope(s, i);
        worst_rel = std::max(worst_rel, std::abs(sampled - closed) / closed);
        H.push_back(sampled);
    }
    g.add("envelope-sampled-vs-closed-form", worst_rel <= 1e-8, worst_rel, 1e-8, "H_0..H_10, relative");

    const EnvelopeGrowth fit = fit_envelope_growth(H);
    g.add("growth-lambda-finite", std::isfinite(fit.lambda()), fit.lambda(), 0.0);
    g.add("growth-nu-band", fit.nu >= 0.8 && fit.nu <= 1.2, fit.nu, 0.8,
          "least-squares nu over H_0..H_10; see README on the short-range bias of this estimator");
    CsvBuilder csv("k,H_sampled,H_closed_form");
    for (int i = 0; i <= 10; ++i) csv.row(i, H[static_cast<std::size_t>(i)], closed_envelope(s, i));
    g.tables["envelope_growth.csv"] = csv.str();
    g.seconds = t.seconds();
    return g;
}

Group symbol_check() {
    Timer t;
    Group g{"symbol"};
    QuadratureConfig cfg;
    cfg.inner_radius = 1e-2;
    cfg.outer_cutoff = 1e4;
    cfg.panel_tolerance = 1e-9;

    CsvBuilder csv("s,omega,x,value,exact,rel_error");
    for (double s : {0.6, 0.75, 0.9}) {
        const Kernel k = fractional_kernel(1, s);
        for (double omega : {1.0, 2.0}) {
            const ScalarField u = trig_field(omega, 0.0);
            for (double x : {0.0, 0.3}) {
                const OperatorValue v = evaluate(u, k, vec1(x), cfg);
                const double exact = -std::pow(omega, 2.0 * s) * std::cos(omega * x);
                const double rel = std::abs(v.value - exact) / std::abs(exact);
                csv.row(s, omega, x, v.value, exact, rel);
                std::ostringstream name;
                name << "symbol-s" << s << "-w" << omega << "-x" << x;
                g.add(name.str(), rel <= 1e-4, rel, 1e-4);
            }
        }
    }
    g.tables["symbol.csv"] = csv.str();
    g.seconds = t.seconds();
    return g;
}

Group classical_limit() {
    Timer t;
    Group g{"classical-limit"};
    const Kernel k = fractional_kernel(1, 0.999);
    QuadratureConfig cfg;
    cfg.panel_tolerance = 1e-10;
    const OperatorValue v = evaluate(gaussian_field(1.0), k, vec1(0.0), cfg);
    const double rel = std::abs(v.value - (-2.0)) / 2.0;
    g.add("laplacian-recovery", rel <= 0.02, rel, 0.02, "s = 0.999, gaussian, x = 0, exact u'' = -2");
    g.seconds = t.seconds();
    return g;
}

Group quotient_integral_limit() {
    Timer t;
    Group g{"quotient-integral"};
    const Kernel k = fractional_kernel(1, 0.75);
    std::vector<double> hs;
    for (int e = 3; e <= 7; ++e) hs.push_back(std::pow(2.0, -e));

    for (int gamma : {1, 2}) {
        for (double r : {2.0, 3.0}) {
            const auto rows = quotient_integral_convergence(k, MultiIndex{gamma, 0}, r, hs);
            CsvBuilder csv("h,lhs,rhs,ratio");
            for (const auto& row : rows) csv.row(row.h, row.lhs, row.rhs, row.ratio);
            std::ostringstream tag;
            tag << "gamma" << gamma << "-r" << r;
            g.tables["quotient_integral_" + tag.str() + ".csv"] = csv.str();
            const double final_dev = std::abs(rows.back().ratio - 1.0);
            g.add("limit-" + tag.str(), final_dev <= 1e-2, final_dev, 1e-2, "finest h = 2^-7");
        }
    }
    g.seconds = t.seconds();
    return g;
}

Group apriori_estimate() {
    Timer t;
    Group g{"apriori"};
    const double s = 0.75;
    const std::vector<double> H = closed_envelope_list(s, 12);
    const std::vector<double> deltas{0.25, 0.5};
    const double r = 1.0;

    CsvBuilder csv("pair,p,delta,lhs,bracket,ratio");
    double c_cal = 0.0;
    double cos_max = 0.0, cos_min = std::numeric_limits<double>::infinity();
    bool all_finite = true;

    for (double omega : {1.0, 2.0}) {
        auto [u, f] = trig_pair(omega, s);
        for (double d : deltas) {
            for (int p = 0; p <= 8; ++p) {
                const AprioriResult res = verify_apriori(u, f, s, r, d, p, H, 1.0);
                all_finite = all_finite && std::isfinite(res.ratio);
                c_cal = std::max(c_cal, res.ratio);
                if (omega == 1.0) {
                    cos_max = std::max(cos_max, res.ratio);
                    cos_min = std::min(cos_min, res.ratio);
                }
                std::ostringstream tag;
                tag << "trig" << omega;
                csv.row(tag.str(), p, d, res.lhs, res.bracket, res.ratio);
            }
        }
    }

    const ScalarField ug = gaussian_field(1.0);
    const ScalarField fg = fractional_gaussian_image(s);
    double holdout_max = 0.0;
    for (double d : deltas) {
        for (int p = 0; p <= 8; ++p) {
            const AprioriResult res = verify_apriori(ug, fg, s, r, d, p, H, 1.0);
            all_finite = all_finite && std::isfinite(res.ratio);
            holdout_max = std::max(holdout_max, res.ratio);
            csv.row("gaussian", p, d, res.lhs, res.bracket, res.ratio);
        }
    }

    g.add("ratios-finite", all_finite, all_finite ? 0.0 : 1.0, 0.0, "p = 0..8, delta in {0.25, 0.5}");
    const double spread = cos_max / cos_min;
    g.add("ratio-spread", spread <= 1e2, spread, 1e2,
          "max/min over p on the cos pair; see README on the kernel-envelope term growth");
    g.add("calibrated-transfer-margin", c_cal - holdout_max >= 0.0, c_cal - holdout_max, 0.0,
          "C calibrated on trig pairs, held-out gaussian pair");
    g.tables["apriori.csv"] = csv.str();
    g.seconds = t.seconds();
    return g;
}

Group induction_step() {
    Timer t;
    Group g{"induction-step"};
    const double s = 0.75;
    const std::vector<double> H = closed_envelope_list(s, 12);
    const StepCalibration cal = calibrate_step(s, H);

    CsvBuilder csv("pair,p,lhs,rhs,ratio");
    double worst_cal = 0.0;
    for (std::size_t i = 0; i < cal.trig_ladders.size(); ++i) {
        for (int p = 1; p <= 10; ++p) {
            const StepResult r = verify_step(cal.trig_ladders[i], p, cal.E, cal.F, H, 1.0);
            worst_cal = std::max(worst_cal, r.ratio);
            csv.row(i == 0 ? "trig1" : "trig2", p, r.lhs, r.rhs, r.ratio);
        }
    }
    g.add("calibrated-ratios", worst_cal <= 1.0 + 1e-12, worst_cal, 1.0,
          "E calibrated as the suite maximum, F from the envelope growth fit");

    const NormLadder held = ladder(gaussian_field(1.0), fractional_gaussian_image(s), 2.0, s, 10,
                                   LadderConfig{17, 129, true});
    double worst_holdout = 0.0;
    for (int p = 1; p <= 10; ++p) {
        const StepResult r = verify_step(held, p, cal.E, cal.F, H, 1.0);
        worst_holdout = std::max(worst_holdout, r.ratio);
        csv.row("gaussian", p, r.lhs, r.rhs, r.ratio);
    }
    g.add("holdout-transfer", worst_holdout <= 1.5, worst_holdout, 1.5, "held-out gaussian pair");
    g.tables["induction_step.csv"] = csv.str();
    g.seconds = t.seconds();
    return g;
}

Group induction_closure_suite() {
    Timer t;
    Group g{"induction-closure"};

    {
        InductionConstants c;
        c.E = 1.0;
        c.F = 1.0;
        c.L = 0.0;
        c.u_sup = 0.0;
        c.sigma = 1.0;
        const ClosureResult res = induction_closure(c, 8);
        g.add("two-term-bracket", res.feasible && res.Gamma <= 2.0, res.Gamma, 2.0,
              "E = 1, no source, no sup term: bracket = 1/Gamma + 1/Gamma^2");
    }

    // calibrated constants from the step and envelope protocols
    const double s = 0.75;
    const std::vector<double> H = closed_envelope_list(s, 12);
    const StepCalibration cal = calibrate_step(s, H);
    const EnvelopeGrowth growth = fit_envelope_growth(std::span<const double>(H.data(), 11));
    const SourceEnvelope src = fit_source_envelope(scale_field(-1.0, trig_field(1.0, 0.0)), 2.0, 10);

    InductionConstants c;
    c.E = cal.E;
    c.F = cal.F;
    c.L = src.L;
    c.A = src.A;
    c.tau = src.tau;
    c.nu = growth.nu;
    c.u_sup = 1.0;
    c.R = 2.0;
    c.s = s;
    c.sigma = std::max(1.0 + c.nu, c.tau);

    Timer solver_timer;
    const ClosureResult res = induction_closure(c, 200);
    bool reverified = res.feasible;
    for (int p = 1; p <= 200 && reverified; ++p)
        reverified = closure_bracket(c, res.Gamma, res.V, p) <= 1.0;
    const double solver_seconds = solver_timer.seconds();

    g.add("calibrated-feasible", res.feasible, res.Gamma, 0.0, "doubling-then-bisection witness");
    g.add("calibrated-reverified", reverified, res.Gamma, 0.0, "bracket <= 1 for p = 1..200");
    // wall-clock stays out of the check value so reports remain byte-stable
    g.add("solver-runtime-under-1s", solver_seconds < 1.0, 0.0, 0.0, "search plus reverification");
    g.seconds = t.seconds();
    return g;
}

Group gevrey_fits() {
    Timer t;
    Group g{"gevrey-fits"};
    const double s = 0.75;

    struct Case {
        const char* name;
        ScalarField u;
    };
    for (const Case& c : {Case{"cos", trig_field(1.0, 0.0)}, Case{"gaussian", gaussian_field(1.0)},
                          Case{"lorentzian", lorentzian_field()}}) {
        const NormLadder lad = ladder(c.u, ScalarField(), 2.0, s, 14, LadderConfig{33, 257, true});
        const GevreyFit fit = fit_gevrey(lad, 2, 14);
        g.add(std::string("sigma-analytic-") + c.name, fit.sigma >= 0.85 && fit.sigma <= 1.15, fit.sigma, 1.0,
              "clamped analytic order");
    }

    {
        const NormLadder lad = ladder(flat_bump_field(), ScalarField(), 2.0, s, 18, LadderConfig{64, 512, true});
        const GevreyFit fit = fit_gevrey(lad, 6, 18);
        g.add("sigma-flat-bump", fit.sigma >= 1.7 && fit.sigma <= 2.3, fit.sigma, 2.0, "fit window p = 6..18");
        CsvBuilder csv("p,nstar");
        for (int p = -2; p <= 18; ++p) csv.row(p, lad.nstar_at(p));
        g.tables["flat_bump_ladder.csv"] = csv.str();
    }

    {
        NormLadder synth;
        synth.R = 2.0;
        synth.s = s;
        synth.p_max = 14;
        synth.nstar.assign(17, 0.0);
        for (int p = -2; p <= 14; ++p) {
            const double lg = p >= 0 ? std::lgamma(p + 1.0) : 0.0;
            synth.nstar[static_cast<std::size_t>(p + 2)] = std::exp(p * std::log(2.0) + 1.5 * lg);
        }
        const GevreyFit fit = fit_gevrey(synth, 0, 14);
        const double err = std::max({std::abs(fit.sigma - 1.5), std::abs(fit.log_gamma - std::log(2.0)),
                                     std::abs(fit.log_v)});
        g.add("synthetic-exact-recovery", err <= 1e-6, err, 1e-6, "nstar = 2^p (p!)^1.5");
    }

    {
        NormLadder poly_lad = ladder(polynomial_field({0.0, 0.0, 0.0, 1.0}), ScalarField(), 2.0, s, 14,
                                     LadderConfig{17, 129, true});
        const GevreyFit fit = fit_gevrey(poly_lad, 0, 14);
        g.add("finitely-supported-marker", fit.finitely_supported, fit.finitely_supported ? 1.0 : 0.0, 1.0,
              "cubic polynomial ladder");
    }
    g.seconds = t.seconds();
    return g;
}

std::vector<std::string> suite_names() {
    return {"stencil", "kernel", "symbol", "proint", "apriori", "step", "closure", "gevrey", "all"};
}

std::vector<Group> run_suite(const std::string& name, std::uint64_t seed) {
    std::vector<Group> out;
    auto want = [&](const char* n) { return name == n || name == "all"; };
    if (want("stencil")) {
        out.push_back(stencil_exactness());
        out.push_back(quotient_convergence());
        out.push_back(discrete_identities(seed));
    }
    if (want("kernel")) {
        out.push_back(kernel_homogeneity(seed));
        out.push_back(envelope_growth_fit(seed));
    }
    if (want("symbol")) {
        out.push_back(symbol_check());
        out.push_back(classical_limit());
    }
    if (want("proint")) out.push_back(quotient_integral_limit());
    if (want("apriori")) out.push_back(apriori_estimate());
    if (want("step")) out.push_back(induction_step());
    if (want("closure")) out.push_back(induction_closure_suite());
    if (want("gevrey")) out.push_back(gevrey_fits());
    if (out.empty()) throw std::invalid_argument("unknown suite \"" + name + "\"");
    return out;
}

nlohmann::json report_json(const std::vector<Group>& groups, const nlohmann::json& job_config) {
    nlohmann::json jgroups = nlohmann::json::array();
    for (const Group& g : groups) {
        nlohmann::json checks = nlohmann::json::array();
        for (const Check& c : g.checks)
            checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"value", c.value},
                              {"threshold", c.threshold},
                              {"detail", c.detail}});
        nlohmann::json tables = nlohmann::json::object();
        for (const auto& [k, v] : g.tables) tables[k] = v;
        jgroups.push_back({{"name", g.name}, {"pass", g.pass()}, {"checks", checks}, {"tables", tables}});
    }
    return {{"version", std::string(kVersion)}, {"config", job_config}, {"groups", jgroups}};
}

}  // namespace gevlab::suites
