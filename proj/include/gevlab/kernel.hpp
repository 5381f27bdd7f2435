#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gevlab/field.hpp"
#include "gevlab/geometry.hpp"
#include "gevlab/sampling.hpp"

namespace gevlab {

// Normalization constant of the fractional Laplacian,
// c_{n,s} = 2^{2s} s Gamma(n/2 + s) / (pi^{n/2} Gamma(1 - s)).
double fractional_normalization(int n, double s);

// Singular kernel K(x, y) on B_1 x (R^n \ {0}), positive by convention.
// The builtin families share the factorization
//   K(x, y) = modulation(x, y/|y|) * (c_{n,s}/2) |y|^{-(n+2s)}
// which keeps radial moment integrals in closed form.
class Kernel {
  public:
    enum class Kind { fractional, perturbed, custom };

    int dim() const { return dim_; }
    double s() const { return s_; }
    double normalization() const { return cns_; }
    Kind kind() const { return kind_; }
    std::string describe() const;

    double eval(const Vec& x, const Vec& y) const;
    double operator()(const Vec& x, const Vec& y) const { return eval(x, y); }

    // True for the builtin families: radial part is exactly |y|^{-(n+2s)}.
    bool homogeneous_radial() const { return kind_ != Kind::custom; }

    // K(x, v) for |v| = 1; the direction-dependent coefficient in front of
    // |y|^{-(n+2s)}.
    double radial_coefficient(const Vec& x, const Vec& unit_y) const;

    // integral of K(x, y) over |y| > r, closed form for homogeneous kernels.
    double tail_integral(const Vec& x, double r) const;

    // D_x^mu D_y^theta K(x, y), exact via jet arithmetic. In 2D only pure
    // axis derivatives are supported; custom kernels expose no derivatives.
    double xy_derivative(const Vec& x, const Vec& y, const MultiIndex& mu, const MultiIndex& theta) const;

    double y_derivative(const Vec& x, const Vec& y, const MultiIndex& theta) const {
        return xy_derivative(x, y, MultiIndex{0, 0}, theta);
    }

    friend Kernel fractional_kernel(int n, double s);
    friend Kernel perturbed_kernel(int n, double s, double eps, ScalarField phi, ScalarField psi);
    friend Kernel custom_kernel(int n, double s, std::function<double(const Vec&, const Vec&)> f);

  private:
    Kernel() = default;

    Kind kind_ = Kind::fractional;
    int dim_ = 1;
    double s_ = 0.75;
    double cns_ = 0.0;
    double eps_ = 0.0;
    ScalarField phi_, psi_;  // perturbed: (1 + eps phi(x) psi(y/|y|)) K0(y)
    std::function<double(const Vec&, const Vec&)> custom_;
};

Kernel fractional_kernel(int n, double s);

// (1 + eps * phi(x) * psi(y/|y|)) * K0(y); requires |eps| sup|phi| sup|psi| < 1
// so the kernel stays positive. 1D only (the angular factor reduces to
// psi(+-1)).
Kernel perturbed_kernel(int n, double s, double eps, ScalarField phi, ScalarField psi);

// User-supplied evaluator; flagged custom, unchecked derivatives.
Kernel custom_kernel(int n, double s, std::function<double(const Vec&, const Vec&)> f);

// Proximity of |y|^{n+2s} K(x,y) / (2-2s) to a constant near y = 0:
// a0 = midpoint of the sampled range over x in B_1, 0 < |y| < r0,
// eta = half-width; pass iff eta < a0 / 4.
struct ProximityReport {
    double a0 = 0.0;
    double eta = 0.0;
    double r0 = 0.0;
    bool pass = false;
};
ProximityReport check_proximity(const Kernel& k, double r0, const SampleBudget& budget = {});

// Envelope constant H_k: max over |mu|+|theta| = k and sampled (x, y) of
// |D_x^mu D_y^theta K| |y|^{n+2s+|theta|}. Sampled, not certified.
double derivative_envelope(const Kernel& k, int order, double r0, const SampleBudget& budget = {});

// Least-squares fit of log H_k against (k, log k!) with intercept:
// H_k ~ Lambda^k (k!)^nu.
struct EnvelopeGrowth {
    double log_lambda = 0.0;
    double nu = 0.0;
    double rms = 0.0;
    double log_c0 = 0.0;  // fitted intercept
    double lambda() const;
};
EnvelopeGrowth fit_envelope_growth(std::span<const double> H);

// Full diagnostic: proximity constants, envelope list, growth fit, verdicts.
struct KernelReport {
    ProximityReport proximity;
    std::vector<double> envelope;  // H_0 .. H_m
    EnvelopeGrowth growth;
    bool growth_pass = false;  // H_k <= Lambda^k (k!)^nu within fit tolerance
    bool positivity_pass = false;
    bool sampled_not_certified = true;
};
KernelReport check_kernel(const Kernel& k, double r0, int max_order, const SampleBudget& budget = {});

}  // namespace gevlab
