#pragma once

// The canonical structure-preserving connection built from the Levi-Civita
// data: its difference tensor Q, torsion, curvature computed two independent
// ways, the auxiliary tensors K and H, class membership tests, scalar
// invariants and their relations, and the rank-4 decomposition basis in
// dimension 4.

#include "papm/geometry.hpp"
#include "papm/manifold.hpp"
#include "papm/tensor.hpp"

namespace papm {

struct PConnectionData {
  DenseTensor Q_mixed;       // (k,i,j): difference tensor, output index first
  DenseTensor Q_lower;       // (0,3): Q_ijk = g(Q(e_i,e_j), e_k)
  DenseTensor Q_from_F;      // (0,3): same tensor from the F-based formula
  DenseTensor gamma_prime;   // (k,i,j)
  DenseTensor dgamma_prime;  // (a,k,i,j)
  DenseTensor T;             // (0,3): torsion, lowered
};

// flip_q_sign is a deliberate fault hook for sensitivity testing: it negates
// Q consistently everywhere in the returned data.
PConnectionData build_p_connection(const PointFrame& frame,
                                   const LeviCivitaData& lc,
                                   const StructureTensors& st,
                                   bool flip_q_sign = false);

// Curvature of the modified connection assembled from its own coefficients.
// Deliberately a separate assembly from riemann() so the closed-form
// comparison cross-validates two code paths.
DenseTensor curvature_direct(const PointFrame& frame, const PConnectionData& pc);

// Closed form: 1/4 { 2 R(x,y,z,w) + 2 R(x,y,Pz,Pw) + K(x,y,z,w) }.
DenseTensor r_prime_formula(const CurvatureData& cd, const DenseTensor& K,
                            const DenseTensor& P);

// K(x,y,z,w) = -g((nabla_x P)z, (nabla_y P)w) + g((nabla_y P)z, (nabla_x P)w).
DenseTensor k_tensor(const PointFrame& frame, const StructureTensors& st);

// H(x,y,z,w) = R(x,y,z,w) + R(x,y,Pz,Pw).
DenseTensor h_tensor(const CurvatureData& cd, const DenseTensor& P);

// Normalized residuals of the curvature-like properties plus compatibility
// with the product structure on both inner slots.
struct PTensorResiduals {
  double antisym = 0.0;   // both pair antisymmetries
  double bianchi = 0.0;   // cyclic sum over the first three slots
  double p_compat = 0.0;  // L(x,y,Pz,Pw) - L(x,y,z,w)
};

PTensorResiduals p_tensor_check(const DenseTensor& L, const DenseTensor& P);

struct ClassFlags {
  bool w0 = false, w3 = false, l1 = false, l2 = false;
  double r_w0 = 0.0, r_w3 = 0.0, r_l1 = 0.0, r_l2 = 0.0;  // normalized
};

ClassFlags class_tests(const StructureTensors& st, const CurvatureData& cd,
                       const DenseTensor& P, double tol);

// Plain and structure-twisted traces of a rank-4 lower tensor.
struct ScalarTraces {
  DenseTensor ricci;       // g^ij L(e_i, y, z, e_j)
  DenseTensor ricci_star;  // g^ij L(e_i, y, z, Pe_j)
  double tau = 0.0;
  double tau_star = 0.0;
};

ScalarTraces scalar_invariants(const DenseTensor& L, const PointFrame& frame);

// Raw inputs for the scalar relation suite, bundled so the residual
// computation is a pure function of one struct.
struct ScalarState {
  double norm_nabla_p = 0.0;
  double tau = 0.0, tau_star = 0.0, tau_star_star = 0.0;
  double tau_prime = 0.0, tau_prime_star = 0.0;
  double tau_K = 0.0, tau_K_star = 0.0;
  double tau_H = 0.0, tau_H_star = 0.0;
};

// Normalized residuals of every scalar relation; gating is the caller's job.
struct ScalarRelationResiduals {
  double ricci_relation = 0.0;  // tensorial: rho + rho*(.,P.) - 2 rho' + rho(K)/2
  double tau_sum = 0.0;           // tau + tau** - 2 tau' + tau(K)/2
  double tau_k_gap = 0.0;           // tau - tau' + (tau(K) - norm)/4
  double tau_k_half = 0.0;           // tau(K) - norm/2
  double tau_norm_gap = 0.0;           // tau - tau' - norm/8
  double norm_from_tau = 0.0;        // norm + 8 (tau' - tau)
  double norm_from_tau_ss = 0.0;     // norm - (8/3)(tau' - tau**)
  double norm_from_tau_k = 0.0;      // norm - 2 tau(K)
  double vanish_agree = 0.0;       // 0 iff the four vanishing conditions agree
};

ScalarRelationResiduals scalar_relations(const ScalarState& s,
                                         const DenseTensor& ricci,
                                         const DenseTensor& ricci_star,
                                         const DenseTensor& ricci_prime,
                                         const DenseTensor& ricci_K,
                                         const PointFrame& frame, double tol);

struct PiBasis {
  DenseTensor pi1, pi2, pi3;  // rank 4, all lower
};

PiBasis pi_basis(const PointFrame& frame);

// Dimension-4 expansion of H over the invariant basis.  The compatible
// combination pi1 + pi2 carries the plain trace (the difference is killed by
// the structure-compatibility H satisfies under its gate), pi3 the twisted
// one; coefficients tau(H)/8 and tau*(H)/8.
struct DecompositionResiduals {
  double decomposition = 0.0;  // H - (tau(H)/8)(pi1+pi2) - (tau*(H)/8) pi3
  double tau_h = 0.0;          // tau(H) - (4 tau' - tau(K))/2
  double tau_star_h = 0.0;     // tau*(H) - (4 tau'* - tau*(K))/2
  double closed_form = 0.0;      // H against the same expansion with traded scalars
};

DecompositionResiduals decomposition_4d(const DenseTensor& H,
                                        const ScalarState& s,
                                        const PiBasis& pis);

struct L1Residuals {
  double tensor = 0.0;         // R - R' + K/4
  double tau_link = 0.0;        // tau - tau' + tau(K)/4
  double tau_star_link = 0.0;   // tau* - tau'* + tau*(K)/4
  double dim4_tau = 0.0;       // tau - tau(H)/2
  double dim4_tau_star = 0.0;  // tau* - tau*(H)/2
};

L1Residuals l1_relations(const CurvatureData& cd, const DenseTensor& r_prime,
                         const DenseTensor& K, const ScalarState& s);

} // namespace papm
