#include "papm/report.hpp"

#include <cstdint>
#include <nlohmann/json.hpp>

#include "papm/version.hpp"

namespace papm {

using ordered_json = nlohmann::ordered_json;

bool Report::any_fail() const {
  for (const auto& p : points)
    if (p.any_fail()) return true;
  return false;
}

int Report::total() const {
  int n = 0;
  for (const auto& p : points) n += static_cast<int>(p.checks.size());
  return n;
}

int Report::passed() const {
  int n = 0;
  for (const auto& p : points)
    for (const auto& c : p.checks)
      if (c.status == CheckStatus::Pass) ++n;
  return n;
}

int Report::failed() const {
  int n = 0;
  for (const auto& p : points)
    for (const auto& c : p.checks)
      if (c.status == CheckStatus::Fail) ++n;
  return n;
}

int Report::skipped() const {
  int n = 0;
  for (const auto& p : points)
    for (const auto& c : p.checks)
      if (c.status == CheckStatus::HypothesisNotMet) ++n;
  return n;
}

std::string fnv1a64_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Report build_report(const ManifoldSpec& spec, const std::string& spec_text,
                    const RunOptions& opts, std::optional<int> point_index) {
  Report rep;
  rep.spec_digest = fnv1a64_hex(spec_text);
  rep.tolerance = effective_tol(spec, opts);
  if (point_index) {
    rep.points.push_back(run_point(spec, *point_index, opts));
  } else {
    for (int i = 0; i < static_cast<int>(spec.sample_points.size()); ++i)
      rep.points.push_back(run_point(spec, i, opts));
  }
  return rep;
}

namespace {

ordered_json validation_json(const ValidationReport& v) {
  ordered_json j;
  j["projector"] = v.p_squared;
  j["metric_symmetry"] = v.metric_symmetry;
  j["compatibility"] = v.compatibility;
  j["trace"] = v.trace;
  j["min_eigenvalue"] = v.min_eigenvalue;
  j["pass"] = v.pass;
  return j;
}

ordered_json classes_json(const ClassFlags& c) {
  ordered_json j;
  j["parallel"] = {{"member", c.w0}, {"residual", c.r_w0}};
  j["cyclic_free"] = {{"member", c.w3}, {"residual", c.r_w3}};
  j["curvature_compatible"] = {{"member", c.l1}, {"residual", c.r_l1}};
  j["curvature_cyclic"] = {{"member", c.l2}, {"residual", c.r_l2}};
  return j;
}

} // namespace

std::string report_json(const Report& report) {
  ordered_json j;
  j["tool"] = "papm";
  j["version"] = kVersion;
  j["spec_digest"] = report.spec_digest;
  j["tolerance"] = report.tolerance;
  j["points"] = ordered_json::array();
  for (const PointChecks& p : report.points) {
    ordered_json jp;
    jp["index"] = p.index;
    jp["coordinates"] = p.point;
    jp["validation"] = validation_json(p.validation);
    jp["classes"] = classes_json(p.classes);
    jp["checks"] = ordered_json::array();
    for (const CheckResult& c : p.checks) {
      ordered_json jc;
      jc["id"] = c.id;
      jc["residual"] = c.residual;
      jc["tolerance"] = c.tolerance;
      jc["status"] = to_string(c.status);
      jc["gates"] = c.gates;
      jp["checks"].push_back(std::move(jc));
    }
    j["points"].push_back(std::move(jp));
  }
  j["summary"] = {{"checks", report.total()},
                  {"pass", report.passed()},
                  {"fail", report.failed()},
                  {"hypothesis_not_met", report.skipped()}};
  return j.dump(2) + "\n";
}

} // namespace papm
