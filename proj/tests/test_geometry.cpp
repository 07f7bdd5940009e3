#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "papm/geometry.hpp"

using testutil::Pipeline;

TEST_CASE("sphere chart pins the connection coefficients") {
  Pipeline p = testutil::run("sphere_patch", 0);  // x1 = 0.7
  const double t = 0.7;
  CHECK(p.lc.gamma.at(0, 1, 1) == doctest::Approx(-std::sin(t) * std::cos(t)));
  CHECK(p.lc.gamma.at(1, 0, 1) == doctest::Approx(std::cos(t) / std::sin(t)));
  CHECK(p.lc.gamma.at(1, 1, 0) == doctest::Approx(std::cos(t) / std::sin(t)));
  CHECK(p.lc.gamma.at(0, 0, 0) == doctest::Approx(0.0));
  CHECK(p.lc.nabla_g_residual < 1e-12);

  Pipeline q = testutil::run("sphere_patch", 1);  // x1 = pi/4
  CHECK(q.lc.gamma.at(0, 1, 1) == doctest::Approx(-0.5));
  CHECK(q.lc.gamma.at(1, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("sphere chart pins the curvature sign convention") {
  for (int i = 0; i < 3; ++i) {
    Pipeline p = testutil::run("sphere_patch", i);
    double t = p.spec.sample_points[i][0];
    double s2 = std::sin(t) * std::sin(t);
    CHECK(p.cd.R.at(0, 1, 0, 1) == doctest::Approx(-s2).epsilon(1e-12));
    // unit sphere: the ricci trace reproduces the metric
    CHECK(p.cd.ricci.at(0, 0) == doctest::Approx(1.0));
    CHECK(p.cd.ricci.at(1, 1) == doctest::Approx(s2));
    CHECK(p.cd.tau == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.cd.tau_star == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.cd.tau_star_star == doctest::Approx(-2.0).epsilon(1e-12));
  }
}

TEST_CASE("connection coefficient derivatives match finite differences") {
  const char* names[] = {"sphere_patch", "heisenberg", "warped_product"};
  for (const char* name : names) {
    papm::ManifoldSpec spec = papm::load_spec(papm::fixture(name).json);
    std::vector<double> base = spec.sample_points[0];
    int n = spec.dimension;
    papm::LeviCivitaData lc = papm::christoffel(papm::evaluate_frame(spec, base));
    const double h = 1e-5;
    for (int a = 0; a < n; ++a) {
      std::vector<double> up = base, dn = base;
      up[a] += h;
      dn[a] -= h;
      papm::LeviCivitaData lu = papm::christoffel(papm::evaluate_frame(spec, up));
      papm::LeviCivitaData ld = papm::christoffel(papm::evaluate_frame(spec, dn));
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double fd =
                (lu.gamma.at(k, i, j) - ld.gamma.at(k, i, j)) / (2.0 * h);
            CHECK(lc.dgamma.at(a, k, i, j) ==
                  doctest::Approx(fd).epsilon(1e-6).scale(1.0));
          }
    }
  }
}

TEST_CASE("rotating plane pins the structure tensors") {
  Pipeline p = testutil::run("rotating_2d", 0);  // angle 0
  CHECK(p.st.nablaP.at(0, 0, 1) == doctest::Approx(1.0));
  CHECK(p.st.nablaP.at(0, 1, 0) == doctest::Approx(1.0));
  CHECK(p.st.nablaP.at(1, 0, 1) == doctest::Approx(0.0));
  CHECK(p.st.F.at(0, 0, 1) == doctest::Approx(1.0));
  CHECK(p.st.F.at(0, 1, 0) == doctest::Approx(1.0));
  CHECK(p.st.F.at(0, 0, 0) == doctest::Approx(0.0));
  CHECK(p.st.F.at(1, 0, 1) == doctest::Approx(0.0));
  CHECK(p.st.norm_nabla_p == doctest::Approx(2.0));

  // the four-term structure bracket, output slot lowered
  CHECK(p.st.N.at(0, 1, 0) == doctest::Approx(-2.0));
  CHECK(p.st.N.at(1, 0, 0) == doctest::Approx(-2.0));
  CHECK(p.st.N.at(0, 0, 0) == doctest::Approx(0.0));
  CHECK(p.st.N.at(0, 1, 1) == doctest::Approx(0.0));

  // the norm stays 2 along the chart
  Pipeline q = testutil::run("rotating_2d", 2);
  CHECK(q.st.norm_nabla_p == doctest::Approx(2.0));

  Pipeline r4 = testutil::run("rotating_4d", 1);
  CHECK(r4.st.norm_nabla_p == doctest::Approx(4.0));
  CHECK(r4.cd.R.max_abs() == doctest::Approx(0.0));
}

TEST_CASE("fundamental tensor symmetries hold on curved charts") {
  for (const char* name : {"heisenberg", "warped_product", "sphere_patch"}) {
    Pipeline p = testutil::run(name, 1);
    int n = p.frame.n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          CHECK(p.st.F.at(i, j, k) ==
                doctest::Approx(p.st.F.at(i, k, j)).epsilon(1e-13));
    papm::DenseTensor fpp = papm::twist_slot(
        papm::twist_slot(p.st.F, 1, p.frame.P), 2, p.frame.P);
    CHECK((p.st.F + fpp).max_abs() < 1e-13 * (1.0 + p.st.F.max_abs()));
  }
}

TEST_CASE("covariant derivative of F matches finite differences") {
  for (const char* name : {"sphere_patch", "heisenberg"}) {
    papm::ManifoldSpec spec = papm::load_spec(papm::fixture(name).json);
    std::vector<double> base = spec.sample_points[1];
    int n = spec.dimension;
    papm::PointFrame frame = papm::evaluate_frame(spec, base);
    papm::LeviCivitaData lc = papm::christoffel(frame);
    papm::StructureTensors st = papm::structure_tensors(frame, lc);
    papm::DenseTensor nf = papm::nabla_F(frame, lc, st);

    const double h = 1e-5;
    for (int a = 0; a < n; ++a) {
      std::vector<double> up = base, dn = base;
      up[a] += h;
      dn[a] -= h;
      papm::PointFrame fu = papm::evaluate_frame(spec, up);
      papm::PointFrame fd = papm::evaluate_frame(spec, dn);
      papm::StructureTensors su =
          papm::structure_tensors(fu, papm::christoffel(fu));
      papm::StructureTensors sd =
          papm::structure_tensors(fd, papm::christoffel(fd));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            double dF = (su.F.at(i, j, k) - sd.F.at(i, j, k)) / (2.0 * h);
            double expected = dF;
            for (int s = 0; s < n; ++s)
              expected -= lc.gamma.at(s, a, i) * st.F.at(s, j, k) +
                          lc.gamma.at(s, a, j) * st.F.at(i, s, k) +
                          lc.gamma.at(s, a, k) * st.F.at(i, j, s);
            CHECK(nf.at(a, i, j, k) ==
                  doctest::Approx(expected).epsilon(5e-6).scale(1.0));
          }
    }
  }
}

TEST_CASE("norm contraction identity responds to the cyclic condition") {
  // cyclic sum of F vanishes here, so both residuals collapse
  Pipeline h = testutil::run("heisenberg", 0);
  papm::NormIdentityResiduals rh =
      papm::w3_identity_check(h.frame, h.st, h.cd);
  CHECK(rh.r1 < 1e-10);
  CHECK(rh.r2 < 1e-10);
  CHECK(h.st.norm_nabla_p == doctest::Approx(4.0));
  CHECK(h.cd.tau == doctest::Approx(-0.5));
  CHECK(h.cd.tau_star == doctest::Approx(1.5));
  CHECK(h.cd.tau_star_star == doctest::Approx(-2.5));

  // here it does not vanish and the identity genuinely fails
  Pipeline w = testutil::run("warped_product", 0);
  papm::NormIdentityResiduals rw =
      papm::w3_identity_check(w.frame, w.st, w.cd);
  CHECK(rw.r2 > 1e-3);
}

TEST_CASE("warped chart pins a curvature component") {
  Pipeline p = testutil::run("warped_product", 0);  // x1 = 0.5
  // metric factor f = 1 + x1^2: the plane it scales sees f'^2/4
  CHECK(p.cd.R.at(2, 3, 2, 3) == doctest::Approx(0.25));
}
