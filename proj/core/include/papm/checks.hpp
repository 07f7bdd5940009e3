#pragma once

// The per-point check pipeline: runs every identity in the catalogue against
// one sample point and produces typed results.  Identities proved under
// hypotheses are always computed; when a gate fails their status is
// hypothesis_not_met, never a silent skip and never a run failure.

#include <string>
#include <vector>

#include "papm/manifold.hpp"
#include "papm/pconnection.hpp"

namespace papm {

// Deliberate corruption hooks for sensitivity testing: prove that the checks
// actually fail when the objects they verify are wrong.
enum class FaultInjection {
  None,
  FlipQSign,  // negate the connection difference tensor
  ScaleK,     // multiply the curvature correction tensor by 1.01
};

enum class CheckStatus { Pass, Fail, HypothesisNotMet };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  double residual = 0.0;  // normalized: raw / (1 + magnitude of operands)
  double tolerance = 0.0;
  std::vector<std::string> gates;  // hypothesis names; empty = unconditional
  bool gates_met = true;
  CheckStatus status = CheckStatus::Pass;
};

struct PointChecks {
  int index = 0;
  std::vector<double> point;
  ValidationReport validation;
  ClassFlags classes;
  std::vector<CheckResult> checks;  // catalogue order, complete

  bool any_fail() const;
  const CheckResult* find(const std::string& id) const;
};

struct RunOptions {
  double tol = -1.0;  // gate/validation tolerance; < 0 means spec.tolerance
  FaultInjection fault = FaultInjection::None;
};

// Effective gate tolerance for a run.
double effective_tol(const ManifoldSpec& spec, const RunOptions& opts);

// Full pipeline at one sample point.  Throws only on evaluation errors
// (expression domain faults); identity violations are results, not errors.
PointChecks run_point(const ManifoldSpec& spec, int point_index,
                      const RunOptions& opts);

// The documented catalogue: id, pinned tolerance and gate list of every
// check, in report order.  run_point emits exactly these ids in this order.
struct CatalogueEntry {
  const char* id;
  double tolerance;
  std::vector<std::string> gates;
};

const std::vector<CatalogueEntry>& check_catalogue();

} // namespace papm
