#include "papm/oracle.hpp"

#include <cmath>

#include "papm/expr.hpp"

namespace papm {

DenseTensor naive_ricci(const DenseTensor& L, const PointFrame& frame) {
  int n = frame.n;
  const DenseTensor& gi = frame.metric.g_inv;
  DenseTensor out(n, {Variance::Lower, Variance::Lower});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += gi.at(i, j) * L.at(i, a, b, j);
      out.at(a, b) = acc;
    }
  return out;
}

double naive_tau(const DenseTensor& L, const PointFrame& frame) {
  int n = frame.n;
  const DenseTensor& gi = frame.metric.g_inv;
  double acc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += gi.at(a, b) * gi.at(i, j) * L.at(i, a, b, j);
  return acc;
}

double naive_tau_star(const DenseTensor& L, const PointFrame& frame) {
  int n = frame.n;
  const DenseTensor& gi = frame.metric.g_inv;
  double acc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int s = 0; s < n; ++s)
            acc += gi.at(a, b) * gi.at(i, j) * L.at(i, a, b, s) *
                   frame.P.at(s, j);
  return acc;
}

double naive_tau_star_star(const DenseTensor& L, const PointFrame& frame) {
  int n = frame.n;
  const DenseTensor& gi = frame.metric.g_inv;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              acc += gi.at(i, j) * gi.at(k, s) * L.at(i, k, a, b) *
                     frame.P.at(a, s) * frame.P.at(b, j);
  return acc;
}

double naive_norm_nabla_p(const PointFrame& frame, const DenseTensor& nablaP) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  const DenseTensor& gi = frame.metric.g_inv;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              acc += gi.at(i, j) * gi.at(k, s) * g.at(a, b) *
                     nablaP.at(i, a, k) * nablaP.at(j, b, s);
  return acc;
}

namespace {

double rel(double a, double b) {
  return std::fabs(a - b) / (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

double entry_max_rel(const Expression& e, const std::vector<double>& p) {
  Jet2 ad = e.evaluate_jet2(p);
  Jet2 fd = finite_difference_jet2(e, p);
  double m = rel(ad.value, fd.value);
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) m = std::max(m, rel(ad.grad[i], fd.grad[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m = std::max(m, rel(ad.hess_at(i, j), fd.hess_at(i, j)));
  return m;
}

} // namespace

double ad_fd_max_rel(const ManifoldSpec& spec, const std::vector<double>& point) {
  double m = 0.0;
  for (int i = 0; i < spec.dimension; ++i)
    for (int j = 0; j < spec.dimension; ++j) {
      m = std::max(m, entry_max_rel(*spec.metric[i][j], point));
      m = std::max(m, entry_max_rel(*spec.structure[i][j], point));
    }
  return m;
}

} // namespace papm
