#include "papm/pconnection.hpp"

#include <algorithm>
#include <cmath>

namespace papm {

namespace {

double nres(double r, double scale) { return std::fabs(r) / (1.0 + scale); }

double max3(double a, double b, double c) {
  return std::max(a, std::max(b, c));
}

} // namespace

PConnectionData build_p_connection(const PointFrame& frame,
                                   const LeviCivitaData& lc,
                                   const StructureTensors& st,
                                   bool flip_q_sign) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  double half = flip_q_sign ? 0.5 : -0.5;

  PConnectionData pc;
  pc.Q_mixed = DenseTensor(n, {Variance::Upper, Variance::Lower, Variance::Lower});
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int s = 0; s < n; ++s)
          acc += st.nablaP.at(i, k, s) * frame.P.at(s, j);
        pc.Q_mixed.at(k, i, j) = half * acc;
      }

  pc.Q_lower = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower});
  pc.Q_from_F = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double low = 0.0, from_f = 0.0;
        for (int s = 0; s < n; ++s) {
          low += g.at(k, s) * pc.Q_mixed.at(s, i, j);
          from_f += st.F.at(i, s, k) * frame.P.at(s, j);
        }
        pc.Q_lower.at(i, j, k) = low;
        pc.Q_from_F.at(i, j, k) = half * from_f;
      }

  pc.gamma_prime = lc.gamma;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        pc.gamma_prime.at(k, i, j) += pc.Q_mixed.at(k, i, j);

  DenseTensor dnp = d_nabla_P(frame, lc);
  pc.dgamma_prime = lc.dgamma;
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double acc = 0.0;
          for (int s = 0; s < n; ++s)
            acc += dnp.at(a, i, k, s) * frame.P.at(s, j) +
                   st.nablaP.at(i, k, s) * frame.dP.at(a, s, j);
          pc.dgamma_prime.at(a, k, i, j) += half * acc;
        }

  pc.T = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        pc.T.at(i, j, k) = pc.Q_lower.at(i, j, k) - pc.Q_lower.at(j, i, k);
  return pc;
}

DenseTensor curvature_direct(const PointFrame& frame, const PConnectionData& pc) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  DenseTensor out(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                      Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int t = 0; t < n; ++t) {
            double up = pc.dgamma_prime.at(i, t, j, k) -
                        pc.dgamma_prime.at(j, t, i, k);
            for (int s = 0; s < n; ++s)
              up += pc.gamma_prime.at(t, i, s) * pc.gamma_prime.at(s, j, k) -
                    pc.gamma_prime.at(t, j, s) * pc.gamma_prime.at(s, i, k);
            acc += g.at(l, t) * up;
          }
          out.at(i, j, k, l) = acc;
        }
  return out;
}

DenseTensor r_prime_formula(const CurvatureData& cd, const DenseTensor& K,
                            const DenseTensor& P) {
  DenseTensor rpp = twist_slot(twist_slot(cd.R, 3, P), 2, P);
  DenseTensor out = cd.R * 2.0;
  out += rpp * 2.0;
  out += K;
  out *= 0.25;
  return out;
}

DenseTensor k_tensor(const PointFrame& frame, const StructureTensors& st) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  DenseTensor out(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                      Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m)
            for (int s = 0; s < n; ++s)
              acc += g.at(m, s) * (st.nablaP.at(j, m, k) * st.nablaP.at(i, s, l) -
                                   st.nablaP.at(i, m, k) * st.nablaP.at(j, s, l));
          out.at(i, j, k, l) = acc;
        }
  return out;
}

DenseTensor h_tensor(const CurvatureData& cd, const DenseTensor& P) {
  return cd.R + twist_slot(twist_slot(cd.R, 3, P), 2, P);
}

PTensorResiduals p_tensor_check(const DenseTensor& L, const DenseTensor& P) {
  int n = L.dim();
  double scale = 1.0 + L.max_abs();
  PTensorResiduals r;
  double anti = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          anti = std::max(anti, std::fabs(L.at(i, j, k, l) + L.at(j, i, k, l)));
          anti = std::max(anti, std::fabs(L.at(i, j, k, l) + L.at(i, j, l, k)));
        }
  r.antisym = anti / scale;
  r.bianchi = cyclic_sum_3(L).max_abs() / scale;
  DenseTensor diff = twist_slot(twist_slot(L, 3, P), 2, P) - L;
  r.p_compat = diff.max_abs() / scale;
  return r;
}

ClassFlags class_tests(const StructureTensors& st, const CurvatureData& cd,
                       const DenseTensor& P, double tol) {
  ClassFlags f;
  double f_scale = 1.0 + st.F.max_abs();
  f.r_w0 = st.F.max_abs() / f_scale;
  f.r_w3 = cyclic_sum_3(st.F).max_abs() / f_scale;

  DenseTensor rpp = twist_slot(twist_slot(cd.R, 3, P), 2, P);
  f.r_l1 = (rpp - cd.R).max_abs() / (1.0 + cd.R.max_abs());
  f.r_l2 = cyclic_sum_3(rpp).max_abs() / (1.0 + rpp.max_abs());

  f.w0 = f.r_w0 <= tol;
  f.w3 = f.r_w3 <= tol;
  f.l1 = f.r_l1 <= tol;
  f.l2 = f.r_l2 <= tol;
  // Subset relation: equality with the untwisted tensor forces the cyclic
  // condition through the first Bianchi identity.
  f.l2 = f.l2 || f.l1;
  return f;
}

ScalarTraces scalar_invariants(const DenseTensor& L, const PointFrame& frame) {
  const MetricPair& m = frame.metric;
  ScalarTraces t;
  t.ricci = contract(L, 0, 3, &m);
  t.tau = contract(t.ricci, 0, 1, &m).at();
  t.ricci_star = contract(twist_slot(L, 3, frame.P), 0, 3, &m);
  t.tau_star = contract(t.ricci_star, 0, 1, &m).at();
  return t;
}

ScalarRelationResiduals scalar_relations(const ScalarState& s,
                                         const DenseTensor& ricci,
                                         const DenseTensor& ricci_star,
                                         const DenseTensor& ricci_prime,
                                         const DenseTensor& ricci_K,
                                         const PointFrame& frame, double tol) {
  ScalarRelationResiduals r;

  DenseTensor twisted = twist_slot(ricci_star, 1, frame.P);
  DenseTensor combo = ricci + twisted - ricci_prime * 2.0 + ricci_K * 0.5;
  double scale = max3(ricci.max_abs(), twisted.max_abs(),
                      std::max(2.0 * ricci_prime.max_abs(),
                               0.5 * ricci_K.max_abs()));
  r.ricci_relation = combo.max_abs() / (1.0 + scale);

  r.tau_sum = nres(s.tau + s.tau_star_star - 2.0 * s.tau_prime + 0.5 * s.tau_K,
                 max3(std::fabs(s.tau), std::fabs(s.tau_star_star),
                      std::max(2.0 * std::fabs(s.tau_prime),
                               0.5 * std::fabs(s.tau_K))));
  r.tau_k_gap = nres(s.tau - s.tau_prime + 0.25 * (s.tau_K - s.norm_nabla_p),
                 max3(std::fabs(s.tau), std::fabs(s.tau_prime),
                      0.25 * (std::fabs(s.tau_K) + s.norm_nabla_p)));
  r.tau_k_half = nres(s.tau_K - 0.5 * s.norm_nabla_p,
                 std::max(std::fabs(s.tau_K), 0.5 * s.norm_nabla_p));
  r.tau_norm_gap = nres(s.tau - s.tau_prime - 0.125 * s.norm_nabla_p,
                 max3(std::fabs(s.tau), std::fabs(s.tau_prime),
                      0.125 * s.norm_nabla_p));
  r.norm_from_tau = nres(s.norm_nabla_p + 8.0 * (s.tau_prime - s.tau),
                    std::max(s.norm_nabla_p,
                             8.0 * std::fabs(s.tau_prime - s.tau)));
  r.norm_from_tau_ss =
      nres(s.norm_nabla_p - (8.0 / 3.0) * (s.tau_prime - s.tau_star_star),
           std::max(s.norm_nabla_p,
                    (8.0 / 3.0) * std::fabs(s.tau_prime - s.tau_star_star)));
  r.norm_from_tau_k = nres(s.norm_nabla_p - 2.0 * s.tau_K,
                      std::max(s.norm_nabla_p, 2.0 * std::fabs(s.tau_K)));

  // Four equivalent vanishing conditions; the residual is 0 when their truth
  // values agree and 1 when any of them disagrees.
  bool c0 = s.norm_nabla_p / (1.0 + s.norm_nabla_p) <= tol;
  bool c1 = nres(s.tau_prime - s.tau,
                 std::max(std::fabs(s.tau_prime), std::fabs(s.tau))) <= tol;
  bool c2 = nres(s.tau_prime - s.tau_star_star,
                 std::max(std::fabs(s.tau_prime),
                          std::fabs(s.tau_star_star))) <= tol;
  bool c3 = std::fabs(s.tau_K) / (1.0 + std::fabs(s.tau_K)) <= tol;
  r.vanish_agree = (c0 == c1 && c1 == c2 && c2 == c3) ? 0.0 : 1.0;
  return r;
}

PiBasis pi_basis(const PointFrame& frame) {
  int n = frame.n;
  const DenseTensor& g = frame.metric.g;
  const DenseTensor& p = frame.P_lower;
  PiBasis b;
  std::vector<Variance> low4 = {Variance::Lower, Variance::Lower,
                                Variance::Lower, Variance::Lower};
  b.pi1 = DenseTensor(n, low4);
  b.pi2 = DenseTensor(n, low4);
  b.pi3 = DenseTensor(n, low4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          b.pi1.at(i, j, k, l) = g.at(j, k) * g.at(i, l) - g.at(i, k) * g.at(j, l);
          b.pi2.at(i, j, k, l) = p.at(j, k) * p.at(i, l) - p.at(i, k) * p.at(j, l);
          b.pi3.at(i, j, k, l) = g.at(j, k) * p.at(i, l) - g.at(i, k) * p.at(j, l) +
                                 p.at(j, k) * g.at(i, l) - p.at(i, k) * g.at(j, l);
        }
  return b;
}

DecompositionResiduals decomposition_4d(const DenseTensor& H,
                                        const ScalarState& s,
                                        const PiBasis& pis) {
  DecompositionResiduals r;
  DenseTensor sym = pis.pi1 + pis.pi2;

  DenseTensor model = sym * (s.tau_H / 8.0) + pis.pi3 * (s.tau_H_star / 8.0);
  r.decomposition = (H - model).max_abs() /
                    (1.0 + std::max(H.max_abs(), model.max_abs()));

  double th = 0.5 * (4.0 * s.tau_prime - s.tau_K);
  double ths = 0.5 * (4.0 * s.tau_prime_star - s.tau_K_star);
  r.tau_h = nres(s.tau_H - th, std::max(std::fabs(s.tau_H), std::fabs(th)));
  r.tau_star_h =
      nres(s.tau_H_star - ths, std::max(std::fabs(s.tau_H_star), std::fabs(ths)));

  DenseTensor model2 = sym * (th / 8.0) + pis.pi3 * (ths / 8.0);
  r.closed_form = (H - model2).max_abs() /
                (1.0 + std::max(H.max_abs(), model2.max_abs()));
  return r;
}

L1Residuals l1_relations(const CurvatureData& cd, const DenseTensor& r_prime,
                         const DenseTensor& K, const ScalarState& s) {
  L1Residuals r;
  DenseTensor diff = cd.R - r_prime + K * 0.25;
  r.tensor = diff.max_abs() /
             (1.0 + max3(cd.R.max_abs(), r_prime.max_abs(), 0.25 * K.max_abs()));
  r.tau_link = nres(s.tau - s.tau_prime + 0.25 * s.tau_K,
                   max3(std::fabs(s.tau), std::fabs(s.tau_prime),
                        0.25 * std::fabs(s.tau_K)));
  r.tau_star_link = nres(s.tau_star - s.tau_prime_star + 0.25 * s.tau_K_star,
                        max3(std::fabs(s.tau_star), std::fabs(s.tau_prime_star),
                             0.25 * std::fabs(s.tau_K_star)));
  r.dim4_tau = nres(s.tau - 0.5 * s.tau_H,
                    std::max(std::fabs(s.tau), 0.5 * std::fabs(s.tau_H)));
  r.dim4_tau_star =
      nres(s.tau_star - 0.5 * s.tau_H_star,
           std::max(std::fabs(s.tau_star), 0.5 * std::fabs(s.tau_H_star)));
  return r;
}

} // namespace papm
