#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gevlab/field.hpp"
#include "gevlab/kernel.hpp"

namespace gevlab {

// Weighted derivative suprema over the radius range (R/2, R):
//   nstar(p) = sup_r (R-r)^{p+2}   sup_{B_r} |grad^{p+2} u|,   p >= -2
//   msf(p)   = sup_r (R-r)^{2s+p+1} sup_{B_r} |grad^{p+1} f|,  p >= 0
// The radius sup is a grid maximum plus a golden-section refinement around
// the grid argmax; the spatial sup is a sampled grid maximum. Values are
// sampled suprema, not certified.
struct NormLadder {
    double R = 0.0;
    double s = 0.0;
    int p_max = 0;
    int r_points = 0;
    int spatial_points = 0;
    std::vector<double> nstar;  // index i holds p = i - 2
    std::vector<double> msf;    // index i holds p = i

    double nstar_at(int p) const { return nstar.at(static_cast<std::size_t>(p + 2)); }
    double msf_at(int p) const { return msf.at(static_cast<std::size_t>(p)); }
    bool has_f() const { return !msf.empty(); }
};

struct LadderConfig {
    int r_points = 64;
    int spatial_points = 512;
    bool refine_r = true;
};

// f may be invalid (default ScalarField) to compute the u side only.
NormLadder ladder(const ScalarField& u, const ScalarField& f, double R, double s, int p_max,
                  const LadderConfig& cfg = {});

// Worst log-margin of nstar(p) <= V Gamma^p [p!]^sigma over all p;
// nonnegative = pass. Computed in log space so large p cannot overflow.
double check_key(const NormLadder& lad, double V, double Gamma, double sigma);

struct GevreyFit {
    double sigma = 1.0;
    double log_gamma = 0.0;
    double log_v = 0.0;
    double rms = 0.0;
    double max_dev = 0.0;  // largest positive data excess over the fit
    bool clamped = false;
    bool finitely_supported = false;
    int p_lo = 0, p_hi = 0;

    // log V inflated so the fitted law majorizes every ladder entry used.
    double log_v_upper() const { return log_v + max_dev; }
};

// Least squares of log nstar(p) on (1, p, log p!); sigma clamped to >= 1
// (with V, Gamma refit under the clamp). A ladder whose entries vanish for
// all p in range yields the distinguished finitely_supported result.
GevreyFit fit_gevrey(const NormLadder& lad, int p_lo, int p_hi);

// delta = (R - r) / p; requires p >= 1 (the p = 0 step takes an explicit
// delta from the caller).
double delta_schedule(double R, double r, int p);

// One instance of the a priori bound:
//   lhs     = sup_{B_r} |grad^{p+2} u|
//   bracket = (1/d) sup_{B_{r+d}}|grad^{p+1}u| + (1/d^2) sup_{B_{r+d}}|grad^p u|
//           + d^{2s-1} sup_{B_{r+d}}|grad^{p+1}f| + H_{p+1} 2^p d^{-(p+2)} sup|u|
// The ratio lhs/bracket is the quantity a calibrated constant must dominate.
struct AprioriResult {
    double lhs = 0.0;
    double bracket = 0.0;
    double ratio = 0.0;
};
AprioriResult verify_apriori(const ScalarField& u, const ScalarField& f, double s, double r, double delta, int p,
                             std::span<const double> H, double u_sup, int spatial_points = 257);

// One induction step at order p against a calibrated (E, F):
//   rhs = E [ p nstar(p-1) + p(p-1) nstar(p-2) + msf(p) + F^p H_{p+1} p! sup|u| ]
struct StepResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};
StepResult verify_step(const NormLadder& lad, int p, double E, double F, std::span<const double> H, double u_sup);

// Constants feeding the closure search. sigma must be >= max(1+nu, tau).
struct InductionConstants {
    double E = 1.0, F = 1.0;
    double L = 0.0, A = 1.0;
    double nu = 0.0, tau = 0.0;
    double u_sup = 0.0;
    double R = 1.0;
    double s = 0.75;
    double sigma = 1.0;
};

double closure_bracket(const InductionConstants& c, double Gamma, double V, int p);

// Doubling-then-bisection search for Gamma (V = 1) making the bracket <= 1
// for p = 1..p_check with the p-dependent terms eventually geometrically
// decreasing. Infeasible-at-budget is a result, not an error.
struct ClosureResult {
    double Gamma = 0.0;
    double V = 1.0;
    bool feasible = false;
};
ClosureResult induction_closure(const InductionConstants& c, int p_check);

// Envelope constants of a right-hand side on B_R:
//   sup_{B_R} |grad^p f| <= L (A/R)^p (p!)^tau
// fitted by least squares with tau clamped to >= 0.
struct SourceEnvelope {
    double L = 1.0;
    double A = 1.0;
    double tau = 0.0;
};
SourceEnvelope fit_source_envelope(const ScalarField& f, double R, int p_max, int spatial_points = 257);

}  // namespace gevlab
