#pragma once

// Command implementations behind the CLI.  Each returns the process exit
// code: 0 success, 1 check or validation failures, 2 input or evaluation
// errors.  Output goes to the streams so tests can capture it.

#include <ostream>
#include <string>

namespace papm {

// Run tolerance resolution: a positive explicit value wins, otherwise the
// PAPM_TOL environment variable when it parses to a positive number,
// otherwise -1 so the spec's own tolerance applies.
double resolve_tol(double cli_tol);

int cmd_validate(const std::string& path, double tol, std::ostream& out,
                 std::ostream& err);

int cmd_classify(const std::string& path, double tol, std::ostream& out,
                 std::ostream& err);

// point_index < 0 runs every sample point.  out_path empty writes the JSON
// to out, otherwise to the file and a summary line to out.
int cmd_report(const std::string& path, const std::string& out_path,
               int point_index, double tol, std::ostream& out,
               std::ostream& err);

// fault empty: the full suite (built-in charts stay green, independent
// oracles agree, and each injected fault is caught by its targeted check).
// fault "none", "flip-q" or "scale-k": runs the built-in charts with that
// fault active and reports like a check run, exit 1 when anything fails.
int cmd_selftest(const std::string& fault, std::ostream& out,
                 std::ostream& err);

} // namespace papm
