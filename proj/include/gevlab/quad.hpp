#pragma once

#include <span>
#include <vector>

#include "gevlab/field.hpp"
#include "gevlab/geometry.hpp"
#include "gevlab/kernel.hpp"

namespace gevlab {

struct QuadratureConfig {
    double inner_radius = 1e-2;    // rho: below this, jet substitution in closed form
    double outer_cutoff = 1e3;     // R_c: beyond this, tail handling per mode
    double panel_tolerance = 1e-9; // absolute tolerance of the adaptive middle zone
    int max_subdivisions = 40000;
    enum class TailMode { automatic, bound_only, mapped } tail_mode = TailMode::automatic;
    int angular_points = 64;       // n = 2 only
};

struct OperatorValue {
    double value = 0.0;
    double inner = 0.0, middle = 0.0, tail = 0.0;
    double inner_bound = 0.0, middle_bound = 0.0, tail_bound = 0.0;
    double error_bound() const { return inner_bound + middle_bound + tail_bound; }
};

// delta u(x, y) = u(x+y) + u(x-y) - 2 u(x).
double second_increment(const ScalarField& u, const Vec& x, const Vec& y);

// Lu(x) = integral of delta u(x, y) K(x, y) dy over R^n, three-zone scheme:
//   |y| < rho        order-4 jet of delta u against closed-form radial moments,
//                    remainder bound O(rho^{6-2s}) from the order-6 coefficient
//   rho <= |y| <= Rc adaptive panel quadrature to panel_tolerance
//   |y| > Rc         mapped quadrature via y -> 1/t when the decay permits,
//                    otherwise zero with bound 4 sup|u| int_{|y|>Rc} K
OperatorValue evaluate(const ScalarField& u, const Kernel& k, const Vec& x, const QuadratureConfig& cfg = {});

// integral over |y| > r of |D_y^gamma K(x, y)|; closed form for the
// fractional kernel in 1D, numeric otherwise.
double exterior_derivative_integral(const Kernel& k, const MultiIndex& gamma, double r, const Vec& x = {0.0, 0.0});

struct ConvergenceRow {
    double h = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

// lhs(h) = integral over |y| > r of |T_h^gamma K(x, y)| / h^{|gamma|}
// (quotient in y), against rhs = exterior_derivative_integral; ratio -> 1.
std::vector<ConvergenceRow> quotient_integral_convergence(const Kernel& k, const MultiIndex& gamma, double r,
                                                          std::span<const double> hs, const Vec& x = {0.0, 0.0});

// The image L[gaussian(1)] under the 1D fractional kernel, evaluated through
// the Fourier representation; exact manufactured right-hand side for
// holdout pairs, independent of the quadrature above.
ScalarField fractional_gaussian_image(double s);

// Generic manufactured right-hand side f = Lu with jets obtained by applying
// the operator to derivative fields. 1D; each jet coefficient costs one
// operator evaluation.
ScalarField operator_image_field(ScalarField u, Kernel k, QuadratureConfig cfg = {});

}  // namespace gevlab
