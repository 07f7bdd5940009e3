#pragma once

// Chart description: dimension, coordinate names, metric and product-structure
// component matrices as expressions, sample points.  Loading parses and shape-
// checks; validation evaluates the structure axioms at a point; frame
// evaluation produces the full second-order data downstream modules consume.

#include <string>
#include <vector>

#include "papm/expr.hpp"
#include "papm/tensor.hpp"

namespace papm {

struct ManifoldSpec {
  int dimension = 0;
  std::vector<std::string> coordinates;
  std::vector<std::vector<ExprPtr>> metric;     // n x n, entry (i,j) = g_ij
  std::vector<std::vector<ExprPtr>> structure;  // n x n, entry (i,j) = P^i_j
  std::vector<std::vector<double>> sample_points;
  double tolerance = 1e-9;

  ManifoldSpec() = default;
  ManifoldSpec(ManifoldSpec&&) = default;
  ManifoldSpec& operator=(ManifoldSpec&&) = default;
  ManifoldSpec(const ManifoldSpec&) = delete;
  ManifoldSpec& operator=(const ManifoldSpec&) = delete;
};

// Structure-axiom residuals at one point.  Failures are data, not exceptions,
// so a caller can show every violation at once.
struct ValidationReport {
  double p_squared = 0.0;         // max |(P^2)^i_j - delta^i_j|
  double metric_symmetry = 0.0;   // max |g_ij - g_ji|
  double compatibility = 0.0;     // max |g(Pe_i, Pe_j) - g_ij|
  double trace = 0.0;             // |tr P|
  double min_eigenvalue = 0.0;    // of the symmetrized metric
  double tol = 0.0;
  bool pass = false;              // residuals <= tol and min_eigenvalue > tol
};

// Fully evaluated second-order data at one point.  Derivative slots are raw
// coordinate derivatives (not tensorial); index order puts derivative indices
// first: dg(a,i,j) = d_a g_ij, ddg(a,b,i,j) = d_a d_b g_ij, likewise for P.
struct PointFrame {
  std::vector<double> point;
  int n = 0;
  MetricPair metric;   // g symmetrized, with inverse
  DenseTensor dg;      // (a,i,j)
  DenseTensor ddg;     // (a,b,i,j)
  DenseTensor P;       // P^i_j, (upper, lower)
  DenseTensor dP;      // (a,i,j)
  DenseTensor ddP;     // (a,b,i,j)
  DenseTensor P_lower; // P_ij = g_ik P^k_j
};

// Parse the documented chart file format.  Throws FormatError on structural
// problems (shapes, types, missing keys), OddDimensionError on odd dimension;
// expression failures are wrapped in FormatError naming the matrix cell.
ManifoldSpec load_spec(const std::string& text);

ValidationReport validate_structure(const ManifoldSpec& spec,
                                    const std::vector<double>& point,
                                    double tol);

PointFrame evaluate_frame(const ManifoldSpec& spec,
                          const std::vector<double>& point);

} // namespace papm
