#pragma once

// Levi-Civita level objects on a point frame: Christoffel symbols with their
// coordinate derivatives, the curvature tensor with its plain, twisted and
// doubly twisted traces, the fundamental tensor F of the product structure
// with its covariant derivative, the Nijenhuis tensor, and the square norm of
// the structure's covariant derivative.

#include "papm/manifold.hpp"
#include "papm/tensor.hpp"

namespace papm {

struct LeviCivitaData {
  DenseTensor gamma;   // (k,i,j): connection coefficient, symmetric in (i,j)
  DenseTensor dgamma;  // (a,k,i,j): coordinate derivative of gamma
  double nabla_g_residual = 0.0;  // max |covariant derivative of g|
};

struct CurvatureData {
  DenseTensor R;           // (0,4): R_ijkl
  DenseTensor ricci;       // rho_ab = g^ij R_iabj
  DenseTensor ricci_star;  // rho*_ab = g^ij R(e_i, e_a, e_b, Pe_j)
  double tau = 0.0;        // g^ab rho_ab
  double tau_star = 0.0;   // g^ab rho*_ab
  double tau_star_star = 0.0;  // g^ij g^ks R(e_i, e_k, Pe_s, Pe_j)
};

struct StructureTensors {
  DenseTensor nablaP;  // (a,k,j): covariant derivative, output index k
  DenseTensor F;       // (0,3): F_ijk = g_ks (nablaP)(i,s,j)
  DenseTensor N;       // (0,3): Nijenhuis tensor, output slot lowered last
  DenseTensor nablaF;  // (0,4): filled by nabla_F, empty until then
  double norm_nabla_p = 0.0;  // g^ij g^ks g_mt (nablaP)(i,m,k) (nablaP)(j,t,s)
};

LeviCivitaData christoffel(const PointFrame& frame);

CurvatureData riemann(const PointFrame& frame, const LeviCivitaData& lc);

StructureTensors structure_tensors(const PointFrame& frame,
                                   const LeviCivitaData& lc);

// Coordinate derivative of the covariant derivative of P:
// out(a,i,k,j) = d_a of nablaP(i,k,j).  Needed wherever the connection
// coefficients of a modified connection are differentiated.
DenseTensor d_nabla_P(const PointFrame& frame, const LeviCivitaData& lc);

// (nabla F)_hijk, assembled from second derivatives of P and first
// derivatives of gamma; independent of any F stored on st beyond nablaP.
DenseTensor nabla_F(const PointFrame& frame, const LeviCivitaData& lc,
                    const StructureTensors& st);

// Residual pair for the contraction identity that holds when the cyclic sum
// of F vanishes: r1 compares the square norm with the cross-paired
// contraction, r2 with twice the gap between the plain and doubly twisted
// scalar curvatures.  Raw residuals; the caller gates and normalizes.
struct NormIdentityResiduals {
  double r1 = 0.0;  // | norm + 2 * cross contraction |
  double r2 = 0.0;  // | norm - 2 (tau - tau**) |
};

NormIdentityResiduals w3_identity_check(const PointFrame& frame,
                                        const StructureTensors& st,
                                        const CurvatureData& cd);

} // namespace papm
