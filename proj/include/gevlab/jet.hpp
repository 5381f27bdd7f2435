#pragma once

#include <utility>
#include <vector>

namespace gevlab {

// Truncated Taylor series of a scalar function of one variable,
// t -> sum_k c[k] t^k up to the truncation order. Arithmetic is the exact
// truncation of formal power-series arithmetic; coefficient k of a jet of
// u at x equals D^k u(x) / k!.
class Jet {
  public:
    static constexpr int kMaxOrder = 24;

    explicit Jet(int order);
    Jet(std::initializer_list<double> coeffs);

    // t -> x0 + t (the identity shifted to the expansion point).
    static Jet variable(double x0, int order);
    static Jet constant(double value, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    // k-th derivative value: c[k] * k!.
    double derivative(int k) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    Jet operator-() const;

    friend Jet operator*(const Jet& a, const Jet& b);

  private:
    std::vector<double> c_;
};

// Composition with analytic primitives. All expect and return jets of the
// same truncation order as the argument.
Jet jet_recip(const Jet& a);               // 1/a, a[0] != 0
Jet jet_exp(const Jet& a);                 // exp(a)
Jet jet_pow(const Jet& a, double r);       // a^r, a[0] > 0
std::pair<Jet, Jet> jet_sincos(const Jet& a);

}  // namespace gevlab
