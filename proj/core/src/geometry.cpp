#include "papm/geometry.hpp"

#include <cmath>

namespace papm {

LeviCivitaData christoffel(const PointFrame& frame) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  const DenseTensor& gi = frame.metric.g_inv;
  const DenseTensor& dg = frame.dg;
  const DenseTensor& ddg = frame.ddg;

  LeviCivitaData lc;
  lc.gamma = DenseTensor(n, {Variance::Upper, Variance::Lower, Variance::Lower});
  lc.dgamma = DenseTensor(n, {Variance::Lower, Variance::Upper, Variance::Lower,
                              Variance::Lower});

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l)
          acc += gi.at(k, l) * (dg.at(i, j, l) + dg.at(j, i, l) - dg.at(l, i, j));
        lc.gamma.at(k, i, j) = 0.5 * acc;
        lc.gamma.at(k, j, i) = 0.5 * acc;
      }

  // d(g^-1) = -g^-1 (dg) g^-1, assembled once per derivative direction.
  DenseTensor dgi(n, {Variance::Lower, Variance::Upper, Variance::Upper});
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m)
          for (int t = 0; t < n; ++t)
            acc -= gi.at(k, m) * dg.at(a, m, t) * gi.at(t, l);
        dgi.at(a, k, l) = acc;
      }

  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double acc = 0.0;
          for (int l = 0; l < n; ++l) {
            double s = dg.at(i, j, l) + dg.at(j, i, l) - dg.at(l, i, j);
            double ds = ddg.at(a, i, j, l) + ddg.at(a, j, i, l) - ddg.at(a, l, i, j);
            acc += dgi.at(a, k, l) * s + gi.at(k, l) * ds;
          }
          lc.dgamma.at(a, k, i, j) = 0.5 * acc;
        }

  double res = 0.0;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double cov = dg.at(a, i, j);
        for (int s = 0; s < n; ++s)
          cov -= lc.gamma.at(s, a, i) * g.at(s, j) + lc.gamma.at(s, a, j) * g.at(i, s);
        res = std::max(res, std::fabs(cov));
      }
  lc.nabla_g_residual = res;
  return lc;
}

CurvatureData riemann(const PointFrame& frame, const LeviCivitaData& lc) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  const MetricPair& m = frame.metric;

  CurvatureData cd;
  cd.R = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                         Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int t = 0; t < n; ++t) {
            double up = lc.dgamma.at(i, t, j, k) - lc.dgamma.at(j, t, i, k);
            for (int s = 0; s < n; ++s)
              up += lc.gamma.at(t, i, s) * lc.gamma.at(s, j, k) -
                    lc.gamma.at(t, j, s) * lc.gamma.at(s, i, k);
            acc += g.at(l, t) * up;
          }
          cd.R.at(i, j, k, l) = acc;
        }

  cd.ricci = contract(cd.R, 0, 3, &m);
  cd.tau = contract(cd.ricci, 0, 1, &m).at();
  cd.ricci_star = contract(twist_slot(cd.R, 3, frame.P), 0, 3, &m);
  cd.tau_star = contract(cd.ricci_star, 0, 1, &m).at();
  DenseTensor twice = twist_slot(twist_slot(cd.R, 3, frame.P), 2, frame.P);
  cd.tau_star_star = contract(contract(twice, 0, 3, &m), 0, 1, &m).at();
  return cd;
}

StructureTensors structure_tensors(const PointFrame& frame,
                                   const LeviCivitaData& lc) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  const MetricPair& m = frame.metric;

  StructureTensors st;
  st.nablaP = DenseTensor(n, {Variance::Lower, Variance::Upper, Variance::Lower});
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double acc = frame.dP.at(a, k, j);
        for (int s = 0; s < n; ++s)
          acc += lc.gamma.at(k, a, s) * frame.P.at(s, j) -
                 lc.gamma.at(s, a, j) * frame.P.at(k, s);
        st.nablaP.at(a, k, j) = acc;
      }

  st.F = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int s = 0; s < n; ++s) acc += g.at(k, s) * st.nablaP.at(i, s, j);
        st.F.at(i, j, k) = acc;
      }

  st.N = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int t = 0; t < n; ++t) {
          double comp = 0.0;
          for (int s = 0; s < n; ++s)
            comp += st.nablaP.at(i, t, s) * frame.P.at(s, j) -
                    frame.P.at(s, i) * st.nablaP.at(s, t, j) +
                    st.nablaP.at(j, t, s) * frame.P.at(s, i) -
                    frame.P.at(s, j) * st.nablaP.at(s, t, i);
          acc += g.at(k, t) * comp;
        }
        st.N.at(i, j, k) = acc;
      }

  // Pairwise inner products of covariant derivatives, then two metric traces.
  DenseTensor inner(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                        Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              acc += g.at(a, b) * st.nablaP.at(i, a, k) * st.nablaP.at(j, b, s);
          inner.at(i, k, j, s) = acc;
        }
  st.norm_nabla_p =
      contract(contract(inner, 0, 2, &m), 0, 1, &m).at();
  return st;
}

DenseTensor d_nabla_P(const PointFrame& frame, const LeviCivitaData& lc) {
  int n = frame.n;
  DenseTensor dnp(n, {Variance::Lower, Variance::Lower, Variance::Upper,
                      Variance::Lower});
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < n; ++s)
        for (int j = 0; j < n; ++j) {
          double acc = frame.ddP.at(h, i, s, j);
          for (int l = 0; l < n; ++l)
            acc += lc.dgamma.at(h, s, i, l) * frame.P.at(l, j) +
                   lc.gamma.at(s, i, l) * frame.dP.at(h, l, j) -
                   lc.dgamma.at(h, l, i, j) * frame.P.at(s, l) -
                   lc.gamma.at(l, i, j) * frame.dP.at(h, s, l);
          dnp.at(h, i, s, j) = acc;
        }
  return dnp;
}

DenseTensor nabla_F(const PointFrame& frame, const LeviCivitaData& lc,
                    const StructureTensors& st) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;

  DenseTensor dnp = d_nabla_P(frame, lc);

  DenseTensor out(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                      Variance::Lower});
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double acc = 0.0;
          for (int s = 0; s < n; ++s)
            acc += frame.dg.at(h, k, s) * st.nablaP.at(i, s, j) +
                   g.at(k, s) * dnp.at(h, i, s, j);
          for (int s = 0; s < n; ++s)
            acc -= lc.gamma.at(s, h, i) * st.F.at(s, j, k) +
                   lc.gamma.at(s, h, j) * st.F.at(i, s, k) +
                   lc.gamma.at(s, h, k) * st.F.at(i, j, s);
          out.at(h, i, j, k) = acc;
        }
  return out;
}

NormIdentityResiduals w3_identity_check(const PointFrame& frame,
                                        const StructureTensors& st,
                                        const CurvatureData& cd) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  const MetricPair& m = frame.metric;

  // Cross-paired contraction: derivative index of one factor against the
  // argument index of the other, both through the inverse metric.
  DenseTensor cross(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                        Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < n; ++s)
        for (int j = 0; j < n; ++j) {
          double acc = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              acc += g.at(a, b) * st.nablaP.at(i, a, k) * st.nablaP.at(s, b, j);
          cross.at(i, k, s, j) = acc;
        }
  double s2 = contract(contract(cross, 0, 3, &m), 0, 1, &m).at();

  NormIdentityResiduals r;
  r.r1 = std::fabs(st.norm_nabla_p + 2.0 * s2);
  r.r2 = std::fabs(st.norm_nabla_p - 2.0 * (cd.tau - cd.tau_star_star));
  return r;
}

} // namespace papm
