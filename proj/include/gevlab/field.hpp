#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "gevlab/geometry.hpp"
#include "gevlab/jet.hpp"

namespace gevlab {

// Tail behaviour descriptor, used by the operator quadrature to decide how
// to treat |y| > R_c.
struct Decay {
    enum class Kind { bounded_only, gaussian_like, algebraic };
    Kind kind = Kind::bounded_only;
    double rate = 0.0;  // gaussian rate alpha, or algebraic power

    static Decay bounded() { return {Kind::bounded_only, 0.0}; }
    static Decay gaussian(double alpha) { return {Kind::gaussian_like, alpha}; }
    static Decay algebraic(double power) { return {Kind::algebraic, power}; }
};

// Extension point: anything that can evaluate itself and its directional
// Taylor jets. Builtin fields all report an unrestricted smoothness region;
// externally injected nodes may declare a finite one.
class FieldNode {
  public:
    virtual ~FieldNode() = default;
    virtual int dim() const = 0;
    virtual double eval(const Vec& x) const = 0;
    // Jet of t -> u(x + t v) to the given truncation order.
    virtual Jet jet(const Vec& x, const Vec& v, int order) const = 0;
    virtual double sup_bound() const = 0;
    virtual Decay decay() const = 0;
    // Radius of the ball on which jets are trusted; infinity = everywhere.
    virtual double smooth_radius() const { return std::numeric_limits<double>::infinity(); }
    virtual std::string describe() const = 0;
};

class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(std::shared_ptr<const FieldNode> node) : node_(std::move(node)) {}

    int dim() const { return node_->dim(); }
    double operator()(const Vec& x) const { return node_->eval(x); }
    double operator()(double x) const { return node_->eval(vec1(x)); }
    double sup_bound() const { return node_->sup_bound(); }
    Decay decay() const { return node_->decay(); }
    double smooth_radius() const { return node_->smooth_radius(); }
    std::string describe() const { return node_->describe(); }
    bool valid() const { return node_ != nullptr; }

    // Taylor jet of t -> u(x + t v); throws if x is outside the declared
    // smoothness region or the order exceeds Jet::kMaxOrder.
    Jet jet(const Vec& x, const Vec& v, int order) const;
    Jet jet(double x, int order) const { return jet(vec1(x), vec1(1.0), order); }

    const FieldNode& node() const { return *node_; }
    std::shared_ptr<const FieldNode> share() const { return node_; }

  private:
    std::shared_ptr<const FieldNode> node_;
};

// Builtin manufactured fields. All are C^infinity on the whole space.
ScalarField trig_field(double omega, double phase, int dim = 1);      // cos(omega x1 + phase)
ScalarField gaussian_field(double alpha, int dim = 1);                // exp(-alpha |x|^2)
ScalarField lorentzian_field(int dim = 1);                            // 1 / (1 + |x|^2)
ScalarField flat_bump_field(int dim = 1);                             // exp(-1/(1-|x|^2)) inside the unit ball
ScalarField polynomial_field(std::vector<double> coeffs, int dim = 1);// sum_i c_i x1^i
ScalarField exp_field(double lambda, int dim = 1);                    // exp(lambda x1)
ScalarField sum_field(ScalarField a, ScalarField b);
ScalarField product_field(ScalarField a, ScalarField b);
ScalarField scale_field(double c, ScalarField a);

// Exact mixed/pure partial derivative via jets. In 1D any gamma; in 2D only
// pure axis derivatives (gamma with a single nonzero entry) are supported.
double derivative(const ScalarField& u, const Vec& x, const MultiIndex& gamma);

// Largest |D^m u| over multi-indices of order m at x. Exact in 1D; in 2D the
// maximum runs over the two pure axis derivatives (declared limitation).
double derivative_sup(const ScalarField& u, const Vec& x, int m);

}  // namespace gevlab
