#include "gevlab/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace gevlab {

namespace {
void check_order(int order) {
    if (order < 0 || order > Jet::kMaxOrder)
        throw std::invalid_argument("jet order must be in [0, " + std::to_string(Jet::kMaxOrder) + "]");
}
}  // namespace

Jet::Jet(int order) {
    check_order(order);
    c_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

Jet::Jet(std::initializer_list<double> coeffs) : c_(coeffs) {
    check_order(static_cast<int>(c_.size()) - 1);
    if (c_.empty()) c_.push_back(0.0);
}

Jet Jet::variable(double x0, int order) {
    Jet j(order);
    j.c_[0] = x0;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

Jet Jet::constant(double value, int order) {
    Jet j(order);
    j.c_[0] = value;
    return j;
}

double Jet::derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c_[static_cast<std::size_t>(k)] * f;
}

Jet& Jet::operator+=(const Jet& o) {
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& x : r.c_) x = -x;
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::max(a.order(), b.order());
    Jet r(n);
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j <= b.order() && i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Jet jet_recip(const Jet& a) {
    if (a[0] == 0.0) throw std::domain_error("jet_recip: zero constant term");
    const int n = a.order();
    Jet r(n);
    r[0] = 1.0 / a[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r[k] = -s * r[0];
    }
    return r;
}

Jet jet_exp(const Jet& a) {
    const int n = a.order();
    Jet r(n);
    r[0] = std::exp(a[0]);
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a[j] * r[k - j];
        r[k] = s / k;
    }
    return r;
}

Jet jet_pow(const Jet& a, double r) {
    if (a[0] <= 0.0) throw std::domain_error("jet_pow: non-positive base");
    const int n = a.order();
    Jet g(n);
    g[0] = std::pow(a[0], r);
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += (j * (r + 1.0) - k) * a[j] * g[k - j];
        g[k] = s / (k * a[0]);
    }
    return g;
}

std::pair<Jet, Jet> jet_sincos(const Jet& a) {
    const int n = a.order();
    Jet s(n), c(n);
    s[0] = std::sin(a[0]);
    c[0] = std::cos(a[0]);
    for (int k = 1; k <= n; ++k) {
        double ss = 0.0, cc = 0.0;
        for (int j = 1; j <= k; ++j) {
            ss += j * a[j] * c[k - j];
            cc -= j * a[j] * s[k - j];
        }
        s[k] = ss / k;
        c[k] = cc / k;
    }
    return {s, c};
}

}  // namespace gevlab
