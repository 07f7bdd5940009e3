#include "papm/jet.hpp"

#include <cmath>
#include <cstdlib>

#include "papm/errors.hpp"

namespace papm {

bool Jet2::finite() const {
  if (!std::isfinite(value)) return false;
  for (double g : grad)
    if (!std::isfinite(g)) return false;
  for (double h : hess)
    if (!std::isfinite(h)) return false;
  return true;
}

namespace {

// Chain rule for a scalar function f applied to jet u:
//   (f o u)'  = f'(u) u'
//   (f o u)'' = f'(u) u'' + f''(u) u' (x) u'
Jet2 apply(const Jet2& u, double f, double df, double ddf) {
  Jet2 r(u.dim);
  r.value = f;
  for (int a = 0; a < u.dim; ++a) r.grad[a] = df * u.grad[a];
  for (int a = 0; a < u.dim; ++a)
    for (int b = a; b < u.dim; ++b)
      r.set_hess(a, b, df * u.hess_at(a, b) + ddf * u.grad[a] * u.grad[b]);
  return r;
}

} // namespace

Jet2 operator+(const Jet2& x, const Jet2& y) {
  Jet2 r(x.dim);
  r.value = x.value + y.value;
  for (int a = 0; a < x.dim; ++a) r.grad[a] = x.grad[a] + y.grad[a];
  for (std::size_t i = 0; i < r.hess.size(); ++i) r.hess[i] = x.hess[i] + y.hess[i];
  return r;
}

Jet2 operator-(const Jet2& x, const Jet2& y) {
  Jet2 r(x.dim);
  r.value = x.value - y.value;
  for (int a = 0; a < x.dim; ++a) r.grad[a] = x.grad[a] - y.grad[a];
  for (std::size_t i = 0; i < r.hess.size(); ++i) r.hess[i] = x.hess[i] - y.hess[i];
  return r;
}

Jet2 operator*(const Jet2& x, const Jet2& y) {
  Jet2 r(x.dim);
  r.value = x.value * y.value;
  for (int a = 0; a < x.dim; ++a)
    r.grad[a] = x.grad[a] * y.value + x.value * y.grad[a];
  for (int a = 0; a < x.dim; ++a)
    for (int b = a; b < x.dim; ++b)
      r.set_hess(a, b, x.hess_at(a, b) * y.value + y.hess_at(a, b) * x.value +
                           x.grad[a] * y.grad[b] + x.grad[b] * y.grad[a]);
  return r;
}

Jet2 operator/(const Jet2& x, const Jet2& y) {
  if (y.value == 0.0) throw DomainError("/", 0.0);
  double v = y.value;
  return x * apply(y, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet2 operator-(const Jet2& x) {
  Jet2 r(x.dim);
  r.value = -x.value;
  for (int a = 0; a < x.dim; ++a) r.grad[a] = -x.grad[a];
  for (std::size_t i = 0; i < r.hess.size(); ++i) r.hess[i] = -x.hess[i];
  return r;
}

namespace jet {

Jet2 sin(const Jet2& u) {
  double s = std::sin(u.value), c = std::cos(u.value);
  return apply(u, s, c, -s);
}

Jet2 cos(const Jet2& u) {
  double s = std::sin(u.value), c = std::cos(u.value);
  return apply(u, c, -s, -c);
}

Jet2 tan(const Jet2& u) {
  double t = std::tan(u.value);
  double d = 1.0 + t * t;
  return apply(u, t, d, 2.0 * t * d);
}

Jet2 exp(const Jet2& u) {
  double e = std::exp(u.value);
  return apply(u, e, e, e);
}

Jet2 ln(const Jet2& u) {
  if (u.value <= 0.0) throw DomainError("ln", u.value);
  double v = u.value;
  return apply(u, std::log(v), 1.0 / v, -1.0 / (v * v));
}

Jet2 sqrt(const Jet2& u) {
  // The jet of sqrt is undefined at 0, not just the value's boundary.
  if (u.value <= 0.0) throw DomainError("sqrt", u.value);
  double s = std::sqrt(u.value);
  return apply(u, s, 0.5 / s, -0.25 / (s * u.value));
}

Jet2 tanh(const Jet2& u) {
  double t = std::tanh(u.value);
  double d = 1.0 - t * t;
  return apply(u, t, d, -2.0 * t * d);
}

Jet2 pow(const Jet2& u, double p) {
  double v = u.value;
  double rounded = std::nearbyint(p);
  bool integral = rounded == p;
  if (integral) {
    if (v == 0.0 && p < 0.0) throw DomainError("^", v);
  } else {
    if (v <= 0.0) throw DomainError("^", v);
  }
  if (p == 0.0) return Jet2::constant(u.dim, 1.0);
  double f = std::pow(v, p);
  double df = (v == 0.0 && p < 1.0) ? 0.0 : p * std::pow(v, p - 1.0);
  double ddf = (v == 0.0 && p < 2.0) ? 0.0 : p * (p - 1.0) * std::pow(v, p - 2.0);
  if (v == 0.0) {
    // Integer p >= 1 at base 0: derivatives are 0 except the linear case.
    df = (p == 1.0) ? 1.0 : 0.0;
    ddf = (p == 2.0) ? 2.0 : 0.0;
  }
  return apply(u, f, df, ddf);
}

} // namespace jet

} // namespace papm
