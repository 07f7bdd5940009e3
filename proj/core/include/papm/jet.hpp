#pragma once

#include <vector>

namespace papm {

// Second-order forward-mode jet: value, gradient and Hessian with respect to
// the chart coordinates, propagated together in a single pass.  The Hessian is
// stored as a full dim x dim matrix and kept symmetric by construction: every
// write goes through hess_at() which mirrors (a,b) and (b,a).
struct Jet2 {
  int dim = 0;
  double value = 0.0;
  std::vector<double> grad;  // size dim
  std::vector<double> hess;  // size dim*dim, row-major, symmetric

  Jet2() = default;
  explicit Jet2(int n) : dim(n), grad(n, 0.0), hess(std::size_t(n) * n, 0.0) {}

  static Jet2 constant(int n, double v) {
    Jet2 j(n);
    j.value = v;
    return j;
  }

  // Seed for coordinate i: value v, unit gradient, zero Hessian.
  static Jet2 variable(int n, int i, double v) {
    Jet2 j(n);
    j.value = v;
    j.grad[i] = 1.0;
    return j;
  }

  double hess_at(int a, int b) const { return hess[std::size_t(a) * dim + b]; }
  void set_hess(int a, int b, double v) {
    hess[std::size_t(a) * dim + b] = v;
    hess[std::size_t(b) * dim + a] = v;
  }

  bool finite() const;
};

Jet2 operator+(const Jet2& x, const Jet2& y);
Jet2 operator-(const Jet2& x, const Jet2& y);
Jet2 operator*(const Jet2& x, const Jet2& y);
Jet2 operator/(const Jet2& x, const Jet2& y);
Jet2 operator-(const Jet2& x);

namespace jet {

Jet2 sin(const Jet2& u);
Jet2 cos(const Jet2& u);
Jet2 tan(const Jet2& u);
Jet2 exp(const Jet2& u);
Jet2 ln(const Jet2& u);
Jet2 sqrt(const Jet2& u);
Jet2 tanh(const Jet2& u);

// u^p with a literal exponent.  Integer p admits any base (0^negative is a
// domain error); fractional p requires a strictly positive base.
Jet2 pow(const Jet2& u, double p);

} // namespace jet

} // namespace papm
