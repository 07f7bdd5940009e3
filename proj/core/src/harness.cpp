#include "papm/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "papm/checks.hpp"
#include "papm/errors.hpp"
#include "papm/fixtures.hpp"
#include "papm/geometry.hpp"
#include "papm/manifold.hpp"
#include "papm/oracle.hpp"
#include "papm/report.hpp"

namespace papm {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

double rel(double a, double b) {
  return std::fabs(a - b) / (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

// Agreement thresholds for the independent oracle recomputations.
constexpr double kOracleTol = 1e-12;
constexpr double kAdFdTol = 1e-6;

} // namespace

double resolve_tol(double cli_tol) {
  if (cli_tol > 0.0) return cli_tol;
  if (const char* env = std::getenv("PAPM_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return -1.0;
}

int cmd_validate(const std::string& path, double tol, std::ostream& out,
                 std::ostream& err) {
  try {
    std::string text = read_file(path);
    ManifoldSpec spec = load_spec(text);
    RunOptions opts;
    opts.tol = resolve_tol(tol);
    double eff = effective_tol(spec, opts);
    out << "spec: " << path << "\n";
    out << "dimension " << spec.dimension << ", "
        << spec.sample_points.size() << " sample points, tolerance "
        << fmt(eff) << "\n";
    bool all = true;
    for (std::size_t i = 0; i < spec.sample_points.size(); ++i) {
      ValidationReport v = validate_structure(spec, spec.sample_points[i], eff);
      all = all && v.pass;
      out << "point " << i << ": " << (v.pass ? "pass" : "FAIL")
          << "  projector " << fmt(v.p_squared) << ", symmetry "
          << fmt(v.metric_symmetry) << ", compatibility "
          << fmt(v.compatibility) << ", trace " << fmt(v.trace)
          << ", min eigenvalue " << fmt(v.min_eigenvalue) << "\n";
    }
    out << "validate: " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_classify(const std::string& path, double tol, std::ostream& out,
                 std::ostream& err) {
  try {
    std::string text = read_file(path);
    ManifoldSpec spec = load_spec(text);
    RunOptions opts;
    opts.tol = resolve_tol(tol);
    double eff = effective_tol(spec, opts);
    bool w0 = true, w3 = true, l1 = true, l2 = true;
    for (std::size_t i = 0; i < spec.sample_points.size(); ++i) {
      const auto& pt = spec.sample_points[i];
      ValidationReport v = validate_structure(spec, pt, eff);
      if (!v.pass)
        throw Error("structure axioms fail at point " + std::to_string(i) +
                    "; run validate for details");
      PointFrame frame = evaluate_frame(spec, pt);
      LeviCivitaData lc = christoffel(frame);
      CurvatureData cd = riemann(frame, lc);
      StructureTensors st = structure_tensors(frame, lc);
      ClassFlags c = class_tests(st, cd, frame.P, eff);
      w0 = w0 && c.w0;
      w3 = w3 && c.w3;
      l1 = l1 && c.l1;
      l2 = l2 && c.l2;
      out << "point " << i << ": parallel " << yn(c.w0) << " (" << fmt(c.r_w0)
          << "), cyclic-free " << yn(c.w3) << " (" << fmt(c.r_w3)
          << "), curvature-compatible " << yn(c.l1) << " (" << fmt(c.r_l1)
          << "), curvature-cyclic " << yn(c.l2) << " (" << fmt(c.r_l2)
          << ")\n";
    }
    out << "classes (all points): parallel " << yn(w0) << ", cyclic-free "
        << yn(w3) << ", curvature-compatible " << yn(l1)
        << ", curvature-cyclic " << yn(l2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_report(const std::string& path, const std::string& out_path,
               int point_index, double tol, std::ostream& out,
               std::ostream& err) {
  try {
    std::string text = read_file(path);
    ManifoldSpec spec = load_spec(text);
    RunOptions opts;
    opts.tol = resolve_tol(tol);
    if (point_index >= static_cast<int>(spec.sample_points.size()))
      throw Error("point index out of range: " + std::to_string(point_index));
    std::optional<int> pi;
    if (point_index >= 0) pi = point_index;
    Report rep = build_report(spec, text, opts, pi);
    std::string json = report_json(rep);
    if (out_path.empty()) {
      out << json;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error("cannot write file: " + out_path);
      f << json;
      out << "report: " << rep.total() << " checks, " << rep.passed()
          << " pass, " << rep.failed() << " fail, " << rep.skipped()
          << " hypothesis_not_met -> " << out_path << "\n";
    }
    return rep.any_fail() ? 1 : 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

namespace {

int run_fault_demo(FaultInjection fault, const std::string& name,
                   std::ostream& out) {
  bool any = false;
  for (const Fixture& f : fixtures()) {
    ManifoldSpec spec = load_spec(f.json);
    RunOptions opts;
    opts.fault = fault;
    Report rep = build_report(spec, f.json, opts);
    for (const PointChecks& p : rep.points)
      for (const CheckResult& c : p.checks)
        if (c.status == CheckStatus::Fail) {
          out << f.name << " point " << p.index << ": " << c.id
              << " residual " << fmt(c.residual) << "\n";
          any = true;
        }
  }
  out << "selftest fault " << name << ": "
      << (any ? "failures present" : "clean") << "\n";
  return any ? 1 : 0;
}

void expect(bool ok, const std::string& what, std::vector<std::string>& fails) {
  if (!ok) fails.push_back(what);
}

void pristine_phase(std::ostream& out, std::vector<std::string>& fails) {
  for (const Fixture& f : fixtures()) {
    ManifoldSpec spec = load_spec(f.json);
    Report rep = build_report(spec, f.json, RunOptions{});
    expect(!rep.any_fail(), "fixture " + f.name + ": unexpected check failure",
           fails);
    for (const PointChecks& p : rep.points) {
      expect(p.validation.pass,
             "fixture " + f.name + " point " + std::to_string(p.index) +
                 ": structure axioms fail",
             fails);
      bool flags_ok = p.classes.w0 == f.w0 && p.classes.w3 == f.w3 &&
                      p.classes.l1 == f.l1 && p.classes.l2 == f.l2;
      expect(flags_ok,
             "fixture " + f.name + " point " + std::to_string(p.index) +
                 ": class flags differ from expectation",
             fails);
    }
    out << "fixture " << f.name << ": " << rep.total() << " checks, "
        << rep.passed() << " pass, " << rep.skipped()
        << " hypothesis_not_met\n";
  }
}

void oracle_phase(std::ostream& out, std::vector<std::string>& fails) {
  int compared = 0;
  for (const Fixture& f : fixtures()) {
    ManifoldSpec spec = load_spec(f.json);
    for (std::size_t i = 0; i < spec.sample_points.size(); ++i) {
      const auto& pt = spec.sample_points[i];
      PointFrame frame = evaluate_frame(spec, pt);
      LeviCivitaData lc = christoffel(frame);
      CurvatureData cd = riemann(frame, lc);
      StructureTensors st = structure_tensors(frame, lc);
      std::string where =
          "fixture " + f.name + " point " + std::to_string(i) + ": ";
      expect(rel(naive_tau(cd.R, frame), cd.tau) <= kOracleTol,
             where + "trace disagrees with direct sum", fails);
      expect(rel(naive_tau_star(cd.R, frame), cd.tau_star) <= kOracleTol,
             where + "twisted trace disagrees with direct sum", fails);
      expect(rel(naive_tau_star_star(cd.R, frame), cd.tau_star_star) <=
                 kOracleTol,
             where + "double twisted trace disagrees with direct sum", fails);
      expect(rel(naive_norm_nabla_p(frame, st.nablaP), st.norm_nabla_p) <=
                 kOracleTol,
             where + "structure norm disagrees with direct sum", fails);
      DenseTensor ricci_direct = naive_ricci(cd.R, frame);
      expect((ricci_direct - cd.ricci).max_abs() /
                     (1.0 + cd.ricci.max_abs()) <=
                 kOracleTol,
             where + "ricci disagrees with direct sum", fails);
      expect(ad_fd_max_rel(spec, pt) <= kAdFdTol,
             where + "derivatives disagree with finite differences", fails);
      compared += 6;
    }
  }
  out << "oracles: " << compared << " comparisons\n";
}

void fault_phase(std::ostream& out, std::vector<std::string>& fails) {
  bool flip_detected = false;
  bool scale_detected = false;
  for (const Fixture& f : fixtures()) {
    ManifoldSpec spec = load_spec(f.json);
    RunOptions flip;
    flip.fault = FaultInjection::FlipQSign;
    Report rf = build_report(spec, f.json, flip);
    for (const PointChecks& p : rf.points) {
      const CheckResult* c = p.find("thm.curvature_form");
      if (c && c->status == CheckStatus::Fail) flip_detected = true;
    }
    ManifoldSpec spec2 = load_spec(f.json);
    RunOptions scale;
    scale.fault = FaultInjection::ScaleK;
    Report rs = build_report(spec2, f.json, scale);
    for (const PointChecks& p : rs.points) {
      const CheckResult* c = p.find("scalar.eq3_4");
      if (c && c->status == CheckStatus::Fail) scale_detected = true;
    }
  }
  expect(flip_detected,
         "sign fault in the difference tensor not caught by "
         "thm.curvature_form",
         fails);
  expect(scale_detected,
         "scale fault in the correction tensor not caught by scalar.eq3_4",
         fails);
  out << "faults: flip-q " << (flip_detected ? "detected" : "MISSED")
      << ", scale-k " << (scale_detected ? "detected" : "MISSED") << "\n";
}

} // namespace

int cmd_selftest(const std::string& fault, std::ostream& out,
                 std::ostream& err) {
  try {
    if (!fault.empty()) {
      FaultInjection fi;
      if (fault == "none")
        fi = FaultInjection::None;
      else if (fault == "flip-q")
        fi = FaultInjection::FlipQSign;
      else if (fault == "scale-k")
        fi = FaultInjection::ScaleK;
      else
        throw Error("unknown fault: " + fault +
                    " (expected none, flip-q or scale-k)");
      return run_fault_demo(fi, fault, out);
    }
    std::vector<std::string> fails;
    pristine_phase(out, fails);
    oracle_phase(out, fails);
    fault_phase(out, fails);
    if (fails.empty()) {
      out << "selftest: PASS\n";
      return 0;
    }
    for (const std::string& f : fails) err << "selftest: " << f << "\n";
    out << "selftest: FAIL\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace papm
