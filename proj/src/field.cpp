#include "gevlab/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gevlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(int dim) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("field dimension must be 1 or 2");
}

// Jet of t -> |x + t v|^2 (a quadratic).
Jet radius2_jet(const Vec& x, const Vec& v, int order) {
    Jet q(order);
    q[0] = norm2(x);
    if (order >= 1) q[1] = 2.0 * dot(x, v);
    if (order >= 2) q[2] = norm2(v);
    return q;
}

class TrigField final : public FieldNode {
  public:
    TrigField(double omega, double phase, int dim) : omega_(omega), phase_(phase), dim_(dim) {
        check_dim(dim);
        if (!std::isfinite(omega) || !std::isfinite(phase)) throw std::invalid_argument("trig: non-finite parameter");
    }
    int dim() const override { return dim_; }
    double eval(const Vec& x) const override { return std::cos(omega_ * x[0] + phase_); }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        Jet a(order);
        a[0] = omega_ * x[0] + phase_;
        if (order >= 1) a[1] = omega_ * v[0];
        return jet_sincos(a).second;
    }
    double sup_bound() const override { return 1.0; }
    Decay decay() const override { return Decay::bounded(); }
    std::string describe() const override {
        std::ostringstream os;
        os << "trig(" << omega_ << "," << phase_ << ")";
        return os.str();
    }
    double omega() const { return omega_; }
    double phase() const { return phase_; }

  private:
    double omega_, phase_;
    int dim_;
};

class GaussianField final : public FieldNode {
  public:
    GaussianField(double alpha, int dim) : alpha_(alpha), dim_(dim) {
        check_dim(dim);
        if (!(alpha > 0) || !std::isfinite(alpha)) throw std::invalid_argument("gaussian: alpha must be positive");
    }
    int dim() const override { return dim_; }
    double eval(const Vec& x) const override { return std::exp(-alpha_ * norm2(x)); }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        return jet_exp(radius2_jet(x, v, order) * (-alpha_));
    }
    double sup_bound() const override { return 1.0; }
    Decay decay() const override { return Decay::gaussian(alpha_); }
    std::string describe() const override {
        std::ostringstream os;
        os << "gaussian(" << alpha_ << ")";
        return os.str();
    }

  private:
    double alpha_;
    int dim_;
};

class LorentzianField final : public FieldNode {
  public:
    explicit LorentzianField(int dim) : dim_(dim) { check_dim(dim); }
    int dim() const override { return dim_; }
    double eval(const Vec& x) const override { return 1.0 / (1.0 + norm2(x)); }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        Jet q = radius2_jet(x, v, order);
        q[0] += 1.0;
        return jet_recip(q);
    }
    double sup_bound() const override { return 1.0; }
    Decay decay() const override { return Decay::algebraic(2.0); }
    std::string describe() const override { return "lorentzian"; }

  private:
    int dim_;
};

// exp(-1/(1-|x|^2)) inside the unit ball, identically 0 outside. C^infinity
// everywhere; all derivatives vanish on |x| >= 1, so the outside jet is the
// zero jet. Evaluating the analytic branch too close to the sphere
// underflows harmlessly to 0, matching the true values there.
class FlatBumpField final : public FieldNode {
  public:
    explicit FlatBumpField(int dim) : dim_(dim) { check_dim(dim); }
    int dim() const override { return dim_; }
    double eval(const Vec& x) const override {
        const double w = 1.0 - norm2(x);
        return w > 0 ? std::exp(-1.0 / w) : 0.0;
    }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        const double w0 = 1.0 - norm2(x);
        if (w0 <= 1e-300) return Jet(order);
        Jet w = -radius2_jet(x, v, order);
        w[0] = w0;
        return jet_exp(-jet_recip(w));
    }
    double sup_bound() const override { return std::exp(-1.0); }
    Decay decay() const override { return Decay::gaussian(kInf); }  // compactly supported
    std::string describe() const override { return "flat_bump"; }

  private:
    int dim_;
};

class PolynomialField final : public FieldNode {
  public:
    PolynomialField(std::vector<double> coeffs, int dim) : coeffs_(std::move(coeffs)), dim_(dim) {
        check_dim(dim);
        if (coeffs_.empty()) coeffs_.push_back(0.0);
        for (double c : coeffs_)
            if (!std::isfinite(c)) throw std::invalid_argument("polynomial: non-finite coefficient");
    }
    int dim() const override { return dim_; }
    double eval(const Vec& x) const override {
        double r = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x[0] + coeffs_[i];
        return r;
    }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        Jet t(order);
        t[0] = x[0];
        if (order >= 1) t[1] = v[0];
        Jet r(order);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            r = r * t;
            r[0] += coeffs_[i];
        }
        return r;
    }
    double sup_bound() const override {
        bool constant = true;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0.0) constant = false;
        return constant ? std::abs(coeffs_[0]) : kInf;
    }
    Decay decay() const override { return Decay::bounded(); }
    std::string describe() const override {
        std::ostringstream os;
        os << "polynomial[deg<=" << coeffs_.size() - 1 << "]";
        return os.str();
    }
    const std::vector<double>& coeffs() const { return coeffs_; }

  private:
    std::vector<double> coeffs_;
    int dim_;
};

class ExpField final : public FieldNode {
  public:
    ExpField(double lambda, int dim) : lambda_(lambda), dim_(dim) {
        check_dim(dim);
        if (!std::isfinite(lambda)) throw std::invalid_argument("exp: non-finite rate");
    }
    int dim() const override { return dim_; }
    double eval(const Vec& x) const override { return std::exp(lambda_ * x[0]); }
    Jet jet(const Vec& x, const Vec& v, int order) const override {
        Jet a(order);
        a[0] = lambda_ * x[0];
        if (order >= 1) a[1] = lambda_ * v[0];
        return jet_exp(a);
    }
    double sup_bound() const override { return lambda_ == 0.0 ? 1.0 : kInf; }
    Decay decay() const override { return Decay::bounded(); }
    std::string describe() const override {
        std::ostringstream os;
        os << "exp(" << lambda_ << ")";
        return os.str();
    }

  private:
    double lambda_;
    int dim_;
};

class SumField final : public FieldNode {
  public:
    SumField(ScalarField a, ScalarField b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.dim() != b_.dim()) throw std::invalid_argument("sum: dimension mismatch");
    }
    int dim() const override { return a_.dim(); }
    double eval(const Vec& x) const override { return a_(x) + b_(x); }
    Jet jet(const Vec& x, const Vec& v, int order) const override { return a_.jet(x, v, order) + b_.jet(x, v, order); }
    double sup_bound() const override { return a_.sup_bound() + b_.sup_bound(); }
    Decay decay() const override { return weaker(a_.decay(), b_.decay()); }
    double smooth_radius() const override { return std::min(a_.smooth_radius(), b_.smooth_radius()); }
    std::string describe() const override { return "sum(" + a_.describe() + "," + b_.describe() + ")"; }
    const ScalarField& lhs() const { return a_; }
    const ScalarField& rhs() const { return b_; }

    static Decay weaker(const Decay& p, const Decay& q) {
        auto rank = [](Decay::Kind k) { return k == Decay::Kind::bounded_only ? 0 : (k == Decay::Kind::algebraic ? 1 : 2); };
        if (rank(p.kind) != rank(q.kind)) return rank(p.kind) < rank(q.kind) ? p : q;
        return Decay{p.kind, std::min(p.rate, q.rate)};
    }

  private:
    ScalarField a_, b_;
};

class ProductField final : public FieldNode {
  public:
    ProductField(ScalarField a, ScalarField b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.dim() != b_.dim()) throw std::invalid_argument("product: dimension mismatch");
    }
    int dim() const override { return a_.dim(); }
    double eval(const Vec& x) const override { return a_(x) * b_(x); }
    Jet jet(const Vec& x, const Vec& v, int order) const override { return a_.jet(x, v, order) * b_.jet(x, v, order); }
    double sup_bound() const override { return a_.sup_bound() * b_.sup_bound(); }
    Decay decay() const override { return stronger(a_.decay(), b_.decay()); }
    double smooth_radius() const override { return std::min(a_.smooth_radius(), b_.smooth_radius()); }
    std::string describe() const override { return "product(" + a_.describe() + "," + b_.describe() + ")"; }
    const ScalarField& lhs() const { return a_; }
    const ScalarField& rhs() const { return b_; }

    static Decay stronger(const Decay& p, const Decay& q) {
        auto rank = [](Decay::Kind k) { return k == Decay::Kind::bounded_only ? 0 : (k == Decay::Kind::algebraic ? 1 : 2); };
        if (rank(p.kind) != rank(q.kind)) return rank(p.kind) > rank(q.kind) ? p : q;
        if (p.kind == Decay::Kind::bounded_only) return p;
        return Decay{p.kind, p.rate + q.rate};
    }

  private:
    ScalarField a_, b_;
};

class ScaleField final : public FieldNode {
  public:
    ScaleField(double c, ScalarField a) : c_(c), a_(std::move(a)) {
        if (!std::isfinite(c)) throw std::invalid_argument("scale: non-finite factor");
    }
    int dim() const override { return a_.dim(); }
    double eval(const Vec& x) const override { return c_ * a_(x); }
    Jet jet(const Vec& x, const Vec& v, int order) const override { return a_.jet(x, v, order) * c_; }
    double sup_bound() const override { return std::abs(c_) * a_.sup_bound(); }
    Decay decay() const override { return a_.decay(); }
    double smooth_radius() const override { return a_.smooth_radius(); }
    std::string describe() const override {
        std::ostringstream os;
        os << "scale(" << c_ << "," << a_.describe() << ")";
        return os.str();
    }
    double factor() const { return c_; }
    const ScalarField& inner() const { return a_; }

  private:
    double c_;
    ScalarField a_;
};

}  // namespace

Jet ScalarField::jet(const Vec& x, const Vec& v, int order) const {
    if (order < 0 || order > Jet::kMaxOrder) throw std::invalid_argument("jet order out of range");
    if (norm(x) > smooth_radius())
        throw std::domain_error("jet requested outside the field's smoothness region");
    return node_->jet(x, v, order);
}

ScalarField trig_field(double omega, double phase, int dim) {
    return ScalarField(std::make_shared<TrigField>(omega, phase, dim));
}
ScalarField gaussian_field(double alpha, int dim) {
    return ScalarField(std::make_shared<GaussianField>(alpha, dim));
}
ScalarField lorentzian_field(int dim) { return ScalarField(std::make_shared<LorentzianField>(dim)); }
ScalarField flat_bump_field(int dim) { return ScalarField(std::make_shared<FlatBumpField>(dim)); }
ScalarField polynomial_field(std::vector<double> coeffs, int dim) {
    return ScalarField(std::make_shared<PolynomialField>(std::move(coeffs), dim));
}
ScalarField exp_field(double lambda, int dim) { return ScalarField(std::make_shared<ExpField>(lambda, dim)); }
ScalarField sum_field(ScalarField a, ScalarField b) {
    return ScalarField(std::make_shared<SumField>(std::move(a), std::move(b)));
}
ScalarField product_field(ScalarField a, ScalarField b) {
    return ScalarField(std::make_shared<ProductField>(std::move(a), std::move(b)));
}
ScalarField scale_field(double c, ScalarField a) {
    return ScalarField(std::make_shared<ScaleField>(c, std::move(a)));
}

double derivative(const ScalarField& u, const Vec& x, const MultiIndex& gamma) {
    if (gamma[0] < 0 || gamma[1] < 0) throw std::invalid_argument("derivative: negative multi-index");
    if (u.dim() == 1) {
        if (gamma[1] != 0) throw std::invalid_argument("derivative: 2D multi-index on 1D field");
        return u.jet(x, Vec{1.0, 0.0}, gamma[0]).derivative(gamma[0]);
    }
    if (gamma[0] > 0 && gamma[1] > 0)
        throw std::invalid_argument("derivative: mixed partials unsupported in 2D");
    const Vec axis = gamma[0] > 0 ? Vec{1.0, 0.0} : Vec{0.0, 1.0};
    const int m = gamma.order();
    return u.jet(x, axis, m).derivative(m);
}

double derivative_sup(const ScalarField& u, const Vec& x, int m) {
    if (u.dim() == 1) return std::abs(u.jet(x, Vec{1.0, 0.0}, m).derivative(m));
    const double a = std::abs(u.jet(x, Vec{1.0, 0.0}, m).derivative(m));
    const double b = std::abs(u.jet(x, Vec{0.0, 1.0}, m).derivative(m));
    return std::max(a, b);
}

}  // namespace gevlab
