#pragma once

// Independent recomputations used to cross-check the main pipeline.  Every
// function here is written as a direct index loop against the defining sum,
// deliberately avoiding the generic contraction machinery, so the two code
// paths share no implementation.

#include "papm/geometry.hpp"
#include "papm/manifold.hpp"
#include "papm/tensor.hpp"

namespace papm {

// Ricci trace of a (0,4) tensor: out(a,b) = g^{ij} L(i,a,b,j).
DenseTensor naive_ricci(const DenseTensor& L, const PointFrame& frame);

// Full trace: g^{ab} g^{ij} L(i,a,b,j).
double naive_tau(const DenseTensor& L, const PointFrame& frame);

// Twisted trace: g^{ab} g^{ij} L(i,a,b,s) P^s_j.
double naive_tau_star(const DenseTensor& L, const PointFrame& frame);

// Doubly twisted trace: g^{ij} g^{ks} L(i,k,a,b) P^a_s P^b_j.
double naive_tau_star_star(const DenseTensor& L, const PointFrame& frame);

// Squared magnitude of the covariant structure derivative with the paired
// index layout: g^{ij} g^{ks} g_{ab} D(i,a,k) D(j,b,s) for D = nablaP.
double naive_norm_nabla_p(const PointFrame& frame, const DenseTensor& nablaP);

// Largest deviation between automatic and finite-difference derivatives over
// every metric and structure entry at the given point, relative to scale.
double ad_fd_max_rel(const ManifoldSpec& spec, const std::vector<double>& point);

} // namespace papm
