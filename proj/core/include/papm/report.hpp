#pragma once

// Report assembly.  A report runs the full check catalogue at one or all
// sample points of a spec and serializes the results to JSON with a stable
// field order, so identical inputs produce byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include "papm/checks.hpp"
#include "papm/manifold.hpp"

namespace papm {

struct Report {
  std::string spec_digest;   // digest of the spec file text
  double tolerance = 0.0;    // run tolerance used for gates and validation
  std::vector<PointChecks> points;

  bool any_fail() const;
  // Counts over every check at every point.
  int total() const;
  int passed() const;
  int failed() const;
  int skipped() const;
};

// Runs the catalogue at every sample point, or at the single point given by
// point_index.  spec_text is the raw file content, digested into the report.
Report build_report(const ManifoldSpec& spec, const std::string& spec_text,
                    const RunOptions& opts,
                    std::optional<int> point_index = std::nullopt);

// Serializes with two-space indentation and a trailing newline.
std::string report_json(const Report& report);

// FNV-1a, 64 bit, rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& text);

} // namespace papm
