#include "doctest.h"

#include <cmath>

#include "gevlab/gevrey.hpp"
#include "gevlab/quad.hpp"

using namespace gevlab;

namespace {
std::vector<double> closed_envelope_list(double s, int kmax) {
    const double c = fractional_normalization(1, s);
    std::vector<double> H;
    for (int k = 0; k <= kmax; ++k)
        H.push_back(0.5 * c * std::exp(std::lgamma(1.0 + 2.0 * s + k) - std::lgamma(1.0 + 2.0 * s)));
    return H;
}
}  // namespace

TEST_CASE("ladder of a constant: only the p = -2 entry survives") {
    const NormLadder lad = ladder(polynomial_field({1.0}), ScalarField(), 2.0, 0.75, 8, {17, 65, true});
    CHECK(lad.nstar_at(-2) == doctest::Approx(1.0));
    for (int p = -1; p <= 8; ++p) CHECK(lad.nstar_at(p) == 0.0);
}

TEST_CASE("ladder of u(x) = x at R = 2: the p = -1 entry approaches 1") {
    const NormLadder lad = ladder(polynomial_field({0.0, 1.0}), ScalarField(), 2.0, 0.75, 4, {64, 65, true});
    // sup over r in (1, 2) of (2 - r) * sup|u'| = 1, attained as r -> 1
    CHECK(lad.nstar_at(-1) <= 1.0);
    CHECK(lad.nstar_at(-1) >= 0.95);
    for (int p = 0; p <= 4; ++p) CHECK(lad.nstar_at(p) == 0.0);
}

TEST_CASE("cos ladder entry agrees with the closed-form grid maximization") {
    const double R = 2.0;
    const LadderConfig cfg{64, 513, true};
    const NormLadder lad = ladder(trig_field(1.0, 0.0), ScalarField(), R, 0.75, 4, cfg);
    // p = 3: weight (2-r)^5 against sup_{B_r}|cos^{(5)}| = sin(min(r, pi/2))
    double want = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double r = 1.0 + (i + 1) * 1.0 / 20001.0;
        const double sup = r < 1.5707963267948966 ? std::sin(r) : 1.0;
        want = std::max(want, std::pow(2.0 - r, 5) * sup);
    }
    CHECK(lad.nstar_at(3) == doctest::Approx(want).epsilon(5e-3));
}

TEST_CASE("ladder entries never decrease when the spatial grid is refined to a superset") {
    const LadderConfig coarse{17, 129, false};
    const LadderConfig fine{17, 257, false};  // 2n-1 points contain the n-point grid
    const NormLadder a = ladder(gaussian_field(1.0), ScalarField(), 2.0, 0.75, 10, coarse);
    const NormLadder b = ladder(gaussian_field(1.0), ScalarField(), 2.0, 0.75, 10, fine);
    for (int p = -2; p <= 10; ++p) CHECK(b.nstar_at(p) >= a.nstar_at(p) * (1.0 - 1e-13));
}

TEST_CASE("check_key on hand-made ladders") {
    NormLadder lad;
    lad.p_max = 10;
    lad.nstar.assign(13, 0.0);
    for (int p = -2; p <= 10; ++p)
        lad.nstar[static_cast<std::size_t>(p + 2)] = p >= 0 ? std::exp(std::lgamma(p + 1.0)) : 1.0;

    // nstar(p) = p! with V = Gamma = sigma = 1: zero margin
    CHECK(check_key(lad, 1.0, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));

    // nstar(p) = (p!)^2 with sigma = 1 fails for large p
    for (int p = 0; p <= 10; ++p)
        lad.nstar[static_cast<std::size_t>(p + 2)] = std::exp(2.0 * std::lgamma(p + 1.0));
    CHECK(check_key(lad, 10.0, 10.0, 1.0) < 0.0);
}

TEST_CASE("check_key log-space evaluation agrees with direct evaluation where it fits") {
    const NormLadder lad = ladder(trig_field(1.0, 0.0), ScalarField(), 2.0, 0.75, 12, {33, 257, true});
    const double V = 2.0, Gamma = 1.5, sigma = 1.0;
    const double margin = check_key(lad, V, Gamma, sigma);
    double direct = std::numeric_limits<double>::infinity();
    for (int p = -2; p <= 12; ++p) {
        const double n = lad.nstar_at(p);
        if (n <= 0.0) continue;
        const double fac = p >= 0 ? std::exp(std::lgamma(p + 1.0)) : 1.0;
        direct = std::min(direct, std::log(V * std::pow(Gamma, p) * std::pow(fac, sigma)) - std::log(n));
    }
    CHECK(margin == doctest::Approx(direct).epsilon(1e-10));
    // and the fitted constants, inflated by the residual margin, pass
    const GevreyFit fit = fit_gevrey(lad, 2, 12);
    CHECK(check_key(lad, std::exp(fit.log_v_upper()), std::exp(fit.log_gamma), fit.sigma) >= -1e-9);
}

TEST_CASE("gevrey fit: synthetic exact law recovered to 1e-6") {
    NormLadder synth;
    synth.p_max = 14;
    synth.nstar.assign(17, 0.0);
    for (int p = -2; p <= 14; ++p) {
        const double lg = p >= 0 ? std::lgamma(p + 1.0) : 0.0;
        synth.nstar[static_cast<std::size_t>(p + 2)] = std::exp(p * std::log(2.0) + 1.5 * lg);
    }
    const GevreyFit fit = fit_gevrey(synth, 0, 14);
    CHECK(fit.sigma == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(fit.log_gamma == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(std::abs(fit.log_v) <= 1e-6);
    CHECK(fit.rms <= 1e-10);
}

TEST_CASE("gevrey fit: analytic fields clamp to order one, the flat bump sits near two") {
    const GevreyFit cosfit = fit_gevrey(ladder(trig_field(1.0, 0.0), ScalarField(), 2.0, 0.75, 14, {17, 129, true}), 2, 14);
    CHECK(cosfit.sigma == doctest::Approx(1.0));
    CHECK(cosfit.clamped);

    const GevreyFit gfit = fit_gevrey(ladder(gaussian_field(1.0), ScalarField(), 2.0, 0.75, 14, {17, 129, true}), 2, 14);
    CHECK(gfit.sigma >= 0.85);
    CHECK(gfit.sigma <= 1.15);

    const GevreyFit bump = fit_gevrey(ladder(flat_bump_field(), ScalarField(), 2.0, 0.75, 18, {33, 513, true}), 6, 18);
    CHECK(bump.sigma >= 1.7);
    CHECK(bump.sigma <= 2.3);
    CHECK_FALSE(bump.clamped);
}

TEST_CASE("polynomial ladders give the finitely-supported marker") {
    const NormLadder lad = ladder(polynomial_field({0.0, 0.0, 0.0, 1.0}), ScalarField(), 2.0, 0.75, 10, {17, 65, true});
    const GevreyFit fit = fit_gevrey(lad, 0, 10);
    CHECK(fit.finitely_supported);
    CHECK(fit.sigma == 1.0);
}

TEST_CASE("delta schedule") {
    CHECK(delta_schedule(4.0, 3.0, 2) == doctest::Approx(0.5));
    CHECK(delta_schedule(4.0, 3.9, 10) == doctest::Approx(0.01));
    for (int p = 2; p <= 12; ++p) {
        const double r = 3.1, R = 4.0;
        CHECK(r + delta_schedule(R, r, p) < R);
    }
    CHECK_THROWS_AS(delta_schedule(4.0, 3.0, 0), std::invalid_argument);
}

TEST_CASE("apriori check: constants give zero, scaling leaves the ratio invariant") {
    const double s = 0.75;
    const auto H = closed_envelope_list(s, 10);
    const ScalarField c1 = polynomial_field({5.0});
    const AprioriResult zero = verify_apriori(c1, polynomial_field({0.0}), s, 1.0, 0.5, 2, H, 5.0);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.ratio == 0.0);

    const ScalarField u = trig_field(1.0, 0.0);
    const ScalarField f = scale_field(-1.0, trig_field(1.0, 0.0));
    const AprioriResult base = verify_apriori(u, f, s, 1.0, 0.5, 3, H, 1.0);
    const AprioriResult doubled =
        verify_apriori(scale_field(2.0, u), scale_field(2.0, f), s, 1.0, 0.5, 3, H, 2.0);
    CHECK(doubled.lhs == doctest::Approx(2.0 * base.lhs).epsilon(1e-12));
    CHECK(doubled.bracket == doctest::Approx(2.0 * base.bracket).epsilon(1e-12));
    CHECK(doubled.ratio == doctest::Approx(base.ratio).epsilon(1e-12));
}

TEST_CASE("induction step: polynomial field collapses, rhs monotone in E and F") {
    const double s = 0.75;
    const auto H = closed_envelope_list(s, 12);
    const ScalarField u = polynomial_field({0.0, 0.0, 1.0});
    const NormLadder lad = ladder(u, polynomial_field({0.0}), 2.0, s, 8, {17, 65, true});
    const StepResult r6 = verify_step(lad, 6, 1.0, 1.0, H, 0.0);
    CHECK(r6.lhs == 0.0);
    CHECK(r6.ratio == 0.0);

    auto [uc, fc] = std::pair{trig_field(1.0, 0.0), scale_field(-1.0, trig_field(1.0, 0.0))};
    const NormLadder cl = ladder(uc, fc, 2.0, s, 8, {17, 129, true});
    const StepResult a = verify_step(cl, 4, 1.0, 1.0, H, 1.0);
    const StepResult b = verify_step(cl, 4, 2.0, 1.0, H, 1.0);
    const StepResult c = verify_step(cl, 4, 1.0, 2.0, H, 1.0);
    CHECK(b.rhs > a.rhs);
    CHECK(c.rhs > a.rhs);
    CHECK(b.ratio < a.ratio);
    CHECK(c.ratio < a.ratio);
}

TEST_CASE("closure: two-term bracket, forced-infeasible floor, witness reverification") {
    InductionConstants c;
    c.E = 1.0;
    c.F = 1.0;
    c.L = 0.0;
    c.u_sup = 0.0;
    c.sigma = 1.0;
    const ClosureResult res = induction_closure(c, 16);
    CHECK(res.feasible);
    CHECK(res.Gamma <= 2.0);
    CHECK(closure_bracket(c, 2.0, 1.0, 5) == doctest::Approx(0.75));
    // at Gamma = E the first two terms alone exceed one
    CHECK(closure_bracket(c, 1.0, 1.0, 3) > 1.0);

    InductionConstants hard;
    hard.E = 10.0;
    hard.F = 2.0;
    hard.L = 1.0;
    hard.A = 1.0;
    hard.tau = 1.0;
    hard.u_sup = 1.0;
    hard.sigma = 2.0;
    hard.nu = 1.0;
    const ClosureResult hres = induction_closure(hard, 200);
    REQUIRE(hres.feasible);
    const double floor2 = hard.E * (1.0 / hres.Gamma + 1.0 / (hres.Gamma * hres.Gamma));
    double prev = closure_bracket(hard, hres.Gamma, hres.V, 1);
    for (int p = 2; p <= 200; ++p) {
        const double cur = closure_bracket(hard, hres.Gamma, hres.V, p);
        CHECK(cur <= 1.0);
        // strictly decreasing until the p-terms underflow to the two-term floor
        if (prev > floor2 * (1.0 + 1e-12))
            CHECK(cur < prev);
        else
            CHECK(cur <= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(induction_closure(InductionConstants{.nu = 1.0, .sigma = 1.0}, 4), std::invalid_argument);
}

TEST_CASE("source envelope of the exact trig pair is flat in p") {
    const SourceEnvelope env = fit_source_envelope(scale_field(-1.0, trig_field(1.0, 0.0)), 2.0, 10);
    CHECK(std::abs(env.tau) <= 1e-4);
    CHECK(env.L >= 1.0);
    CHECK(env.L <= 1.2);
    CHECK(env.A == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("end-to-end consistency: fitted orders satisfy the regularity relation with slack") {
    const double s = 0.75;
    auto [u, f] = std::pair{trig_field(1.0, 0.0), scale_field(-1.0, trig_field(1.0, 0.0))};
    const NormLadder lad = ladder(u, f, 2.0, s, 12, {17, 129, true});
    const GevreyFit ufit = fit_gevrey(lad, 2, 12);

    // nu from the closed-form envelope of the fractional kernel
    const auto H = closed_envelope_list(s, 10);
    const EnvelopeGrowth growth = fit_envelope_growth(H);
    const SourceEnvelope src = fit_source_envelope(f, 2.0, 10);

    CHECK(ufit.sigma <= std::max(1.0 + growth.nu, src.tau) + 0.5);
}

TEST_CASE("ladder guards") {
    CHECK_THROWS_AS(ladder(trig_field(1.0, 0.0), ScalarField(), 6.0, 0.75, 4, {}), std::invalid_argument);
    CHECK_THROWS_AS(ladder(trig_field(1.0, 0.0), ScalarField(), 2.0, 0.75, 19, {}), std::invalid_argument);
    CHECK_THROWS_AS(ladder(gaussian_field(1.0, 2), ScalarField(), 2.0, 0.75, 4, {}), std::invalid_argument);
}
