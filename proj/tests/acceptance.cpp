// Acceptance gate for the identity pipeline.  Runs every built-in chart
// through the full check catalogue and prints exactly one PASS or FAIL line
// per numbered criterion.  Exits 0 only when every criterion holds.
//
//   1  closed-form curvature of the adapted connection, fast and tight
//   2  unconditional identity suite at algebraic tolerances
//   3  conditional identities: proved under their gates, withheld otherwise
//   4  four-dimensional trace and basis decomposition results
//   5  independent oracles: finite differences and naive index loops
//   6  fault injection is detected by the checks that own the invariant
//   7  round sphere scalar curvature pin

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "papm/checks.hpp"
#include "papm/fixtures.hpp"
#include "papm/geometry.hpp"
#include "papm/manifold.hpp"
#include "papm/oracle.hpp"

namespace {

using papm::CheckResult;
using papm::CheckStatus;
using papm::PointChecks;

struct Run {
  std::string fixture;
  int point = 0;
  PointChecks checks;
  double seconds = 0.0;
};

std::vector<Run> run_all(papm::FaultInjection fault) {
  std::vector<Run> out;
  for (const papm::Fixture& f : papm::fixtures()) {
    papm::ManifoldSpec spec = papm::load_spec(f.json);
    papm::RunOptions opts;
    opts.fault = fault;
    for (int i = 0; i < static_cast<int>(spec.sample_points.size()); ++i) {
      auto t0 = std::chrono::steady_clock::now();
      PointChecks pc = papm::run_point(spec, i, opts);
      auto t1 = std::chrono::steady_clock::now();
      Run r;
      r.fixture = f.name;
      r.point = i;
      r.checks = std::move(pc);
      r.seconds = std::chrono::duration<double>(t1 - t0).count();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string where(const Run& r) {
  return r.fixture + " point " + std::to_string(r.point);
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criterion 1: the closed-form curvature identity holds at every sample point
// of every chart within 1e-8, and no point takes a second to evaluate.
Outcome criterion1(const std::vector<Run>& base) {
  Outcome out;
  double worst = 0.0;
  double slowest = 0.0;
  for (const Run& r : base) {
    const CheckResult* c = r.checks.find("thm.curvature_form");
    if (!c || c->status != CheckStatus::Pass || c->residual > 1e-8) {
      out.pass = false;
      out.detail = "curvature form failed at " + where(r) + ", residual " +
                   num(c ? c->residual : -1.0);
      return out;
    }
    worst = std::max(worst, c->residual);
    slowest = std::max(slowest, r.seconds);
  }
  if (slowest >= 1.0) {
    out.pass = false;
    out.detail = "a point took " + num(slowest) + " s";
    return out;
  }
  out.detail = std::to_string(base.size()) + " points, worst residual " +
               num(worst) + ", slowest point " + num(slowest) + " s";
  return out;
}

// Criterion 2: every unconditional identity passes everywhere, with residuals
// within 1e-9, or 1e-8 where second derivatives enter the assembly.
Outcome criterion2(const std::vector<Run>& base) {
  static const std::vector<std::string> ids = {
      "F.sym_pair",          "F.skew_pp",          "F.skew_p_mixed",
      "R.antisym_first",     "R.antisym_last",     "R.bianchi",
      "R.ricci_identity",    "conn.q_antisym",     "conn.q_forms_agree",
      "conn.torsion_antisym", "conn.torsion_cyclic", "conn.natural_g",
      "conn.natural_p",      "thm.rprime_antisym", "thm.rprime_p_compat",
      "thm.k_antisym",       "thm.k_p_compat"};
  Outcome out;
  double worst = 0.0;
  int instances = 0;
  for (const Run& r : base)
    for (const std::string& id : ids) {
      const CheckResult* c = r.checks.find(id);
      double bound = (id == "R.ricci_identity") ? 1e-8 : 1e-9;
      if (!c || c->status != CheckStatus::Pass || c->residual > bound) {
        out.pass = false;
        out.detail = id + " at " + where(r) + ", residual " +
                     num(c ? c->residual : -1.0) + " against " + num(bound);
        return out;
      }
      worst = std::max(worst, c->residual);
      ++instances;
    }
  out.detail = std::to_string(ids.size()) + " identities, " +
               std::to_string(instances) + " instances, worst residual " +
               num(worst);
  return out;
}

// Criterion 3: identities that hold only under hypotheses pass wherever their
// gates are met, report hypothesis_not_met wherever they are not, never fail,
// and the parallel product chart exercises every one of them as a pass.
Outcome criterion3(const std::vector<Run>& base) {
  static const std::vector<std::string> ids = {
      "scalar.norm_cross", "scalar.norm_tau_gap",  "scalar.eq3_4",
      "scalar.ricci_relation",        "scalar.tau_sum",    "scalar.tau_k_gap",
      "scalar.tau_norm_gap",           "scalar.norm_from_tau", "scalar.norm_from_tau_ss",
      "scalar.norm_from_tau_k",      "scalar.vanish_equiv", "L1.tensor",
      "L1.tau_link",             "L1.tau_star_link", "L1.dim4_tau",
      "L1.dim4_tau_star"};
  Outcome out;
  int proved = 0;
  int withheld = 0;
  for (const Run& r : base)
    for (const std::string& id : ids) {
      const CheckResult* c = r.checks.find(id);
      if (!c) {
        out.pass = false;
        out.detail = id + " missing at " + where(r);
        return out;
      }
      if (c->gates_met) {
        if (c->status != CheckStatus::Pass) {
          out.pass = false;
          out.detail = id + " gated in but not proved at " + where(r) +
                       ", residual " + num(c->residual);
          return out;
        }
        ++proved;
      } else {
        if (c->status != CheckStatus::HypothesisNotMet) {
          out.pass = false;
          out.detail = id + " gated out but status is not withheld at " +
                       where(r);
          return out;
        }
        ++withheld;
      }
    }
  if (withheld == 0) {
    out.pass = false;
    out.detail = "no chart ever missed a gate, conditional paths untested";
    return out;
  }
  // The parallel product chart satisfies every hypothesis at once, so each
  // conditional check in the whole catalogue must gate in and pass there.
  for (const Run& r : base) {
    if (r.fixture != "flat_product") continue;
    for (const CheckResult& c : r.checks.checks) {
      if (c.gates.empty()) continue;
      if (!c.gates_met || c.status != CheckStatus::Pass) {
        out.pass = false;
        out.detail = c.id + " not proved on the parallel chart at " + where(r);
        return out;
      }
    }
  }
  out.detail = std::to_string(proved) + " proved, " +
               std::to_string(withheld) +
               " withheld, parallel chart proves all";
  return out;
}

// Criterion 4: the dimension four trace values and the basis decomposition
// hold at every four-dimensional point where the curvature gate is met.
Outcome criterion4(const std::vector<Run>& base) {
  static const std::vector<std::string> ids = {
      "dim4.tau_h", "dim4.tau_star_h", "dim4.decomposition", "dim4.closed_form"};
  Outcome out;
  int proved = 0;
  double worst = 0.0;
  for (const Run& r : base)
    for (const std::string& id : ids) {
      const CheckResult* c = r.checks.find(id);
      if (!c) {
        out.pass = false;
        out.detail = id + " missing at " + where(r);
        return out;
      }
      if (!c->gates_met) {
        if (c->status != CheckStatus::HypothesisNotMet) {
          out.pass = false;
          out.detail = id + " gated out but status is not withheld at " +
                       where(r);
          return out;
        }
        continue;
      }
      if (c->status != CheckStatus::Pass) {
        out.pass = false;
        out.detail = id + " failed at " + where(r) + ", residual " +
                     num(c->residual);
        return out;
      }
      worst = std::max(worst, c->residual);
      ++proved;
    }
  if (proved == 0) {
    out.pass = false;
    out.detail = "no four-dimensional point ever met the gates";
    return out;
  }
  out.detail = std::to_string(proved) + " instances proved, worst residual " +
               num(worst);
  return out;
}

// Criterion 5: automatic derivatives agree with central finite differences to
// 1e-6 relative, and every contraction agrees with a naive index loop that
// shares no code with the pipeline to 1e-12.
Outcome criterion5() {
  Outcome out;
  auto rel = [](double a, double b) {
    return std::fabs(a - b) / (1.0 + std::max(std::fabs(a), std::fabs(b)));
  };
  double worst_loop = 0.0;
  double worst_fd = 0.0;
  int comparisons = 0;
  for (const papm::Fixture& f : papm::fixtures()) {
    papm::ManifoldSpec spec = papm::load_spec(f.json);
    int n = spec.dimension;
    for (const auto& pt : spec.sample_points) {
      papm::PointFrame frame = papm::evaluate_frame(spec, pt);
      papm::LeviCivitaData lc = papm::christoffel(frame);
      papm::CurvatureData cd = papm::riemann(frame, lc);
      papm::StructureTensors st = papm::structure_tensors(frame, lc);

      papm::DenseTensor ricci = papm::naive_ricci(cd.R, frame);
      double dr = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          dr = std::max(dr, rel(ricci.at(a, b), cd.ricci.at(a, b)));
      double gaps[5] = {dr,
                        rel(papm::naive_tau(cd.R, frame), cd.tau),
                        rel(papm::naive_tau_star(cd.R, frame), cd.tau_star),
                        rel(papm::naive_tau_star_star(cd.R, frame),
                            cd.tau_star_star),
                        rel(papm::naive_norm_nabla_p(frame, st.nablaP),
                            st.norm_nabla_p)};
      for (double gap : gaps) {
        ++comparisons;
        worst_loop = std::max(worst_loop, gap);
        if (gap > 1e-12) {
          out.pass = false;
          out.detail = "index loop gap " + num(gap) + " on " + f.name;
          return out;
        }
      }
      double fd = papm::ad_fd_max_rel(spec, pt);
      ++comparisons;
      worst_fd = std::max(worst_fd, fd);
      if (fd > 1e-6) {
        out.pass = false;
        out.detail = "derivative gap " + num(fd) + " on " + f.name;
        return out;
      }
    }
  }
  out.detail = std::to_string(comparisons) + " comparisons, worst loop gap " +
               num(worst_loop) + ", worst derivative gap " + num(worst_fd);
  return out;
}

// Criterion 6: corrupting the connection difference flips the closed-form
// curvature check to fail, and scaling the correction tensor flips the norm
// identity on a chart whose structure derivative does not vanish.
Outcome criterion6() {
  Outcome out;
  std::string flip_at;
  for (const Run& r : run_all(papm::FaultInjection::FlipQSign)) {
    const CheckResult* c = r.checks.find("thm.curvature_form");
    if (c && c->status == CheckStatus::Fail) {
      flip_at = where(r);
      break;
    }
  }
  std::string scale_at;
  for (const Run& r : run_all(papm::FaultInjection::ScaleK)) {
    const CheckResult* c = r.checks.find("scalar.eq3_4");
    if (c && c->status == CheckStatus::Fail) {
      scale_at = where(r);
      break;
    }
  }
  if (flip_at.empty() || scale_at.empty()) {
    out.pass = false;
    out.detail = std::string("undetected fault:") +
                 (flip_at.empty() ? " flipped difference tensor" : "") +
                 (scale_at.empty() ? " scaled correction tensor" : "");
    return out;
  }
  out.detail = "sign flip caught at " + flip_at + ", scaling caught at " +
               scale_at;
  return out;
}

// Criterion 7: the unit sphere patch has scalar curvature 2 at every sample
// point to within 1e-9.
Outcome criterion7() {
  Outcome out;
  papm::ManifoldSpec spec =
      papm::load_spec(papm::fixture("sphere_patch").json);
  double worst = 0.0;
  for (const auto& pt : spec.sample_points) {
    papm::PointFrame frame = papm::evaluate_frame(spec, pt);
    papm::LeviCivitaData lc = papm::christoffel(frame);
    papm::CurvatureData cd = papm::riemann(frame, lc);
    worst = std::max(worst, std::fabs(cd.tau - 2.0));
  }
  if (worst > 1e-9) {
    out.pass = false;
    out.detail = "scalar curvature off by " + num(worst);
    return out;
  }
  out.detail = std::to_string(spec.sample_points.size()) +
               " points, worst deviation " + num(worst);
  return out;
}

} // namespace

int main() {
  std::vector<Run> base = run_all(papm::FaultInjection::None);
  Outcome results[7] = {criterion1(base), criterion2(base), criterion3(base),
                        criterion4(base), criterion5(),     criterion6(),
                        criterion7()};
  bool all = true;
  for (int i = 0; i < 7; ++i) {
    std::printf("criterion %d: %s (%s)\n", i + 1,
                results[i].pass ? "PASS" : "FAIL", results[i].detail.c_str());
    all = all && results[i].pass;
  }
  return all ? 0 : 1;
}
