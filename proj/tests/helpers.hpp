#pragma once

// Shared test utilities: one-call pipeline over a built-in chart, and plain
// central finite differences over arbitrary callables so derivative tests do
// not reuse the library's own differencing helper.

#include <functional>
#include <vector>

#include "papm/checks.hpp"
#include "papm/fixtures.hpp"
#include "papm/geometry.hpp"
#include "papm/manifold.hpp"
#include "papm/pconnection.hpp"

namespace testutil {

struct Pipeline {
  papm::ManifoldSpec spec;
  papm::PointFrame frame;
  papm::LeviCivitaData lc;
  papm::CurvatureData cd;
  papm::StructureTensors st;
  papm::PConnectionData pc;
  papm::DenseTensor rp;  // curvature of the modified connection, direct
  papm::DenseTensor K;
  papm::DenseTensor H;
};

inline Pipeline run(const std::string& fixture_name, int point) {
  Pipeline p;
  p.spec = papm::load_spec(papm::fixture(fixture_name).json);
  p.frame = papm::evaluate_frame(p.spec, p.spec.sample_points.at(point));
  p.lc = papm::christoffel(p.frame);
  p.cd = papm::riemann(p.frame, p.lc);
  p.st = papm::structure_tensors(p.frame, p.lc);
  p.st.nablaF = papm::nabla_F(p.frame, p.lc, p.st);
  p.pc = papm::build_p_connection(p.frame, p.lc, p.st);
  p.rp = papm::curvature_direct(p.frame, p.pc);
  p.K = papm::k_tensor(p.frame, p.st);
  p.H = papm::h_tensor(p.cd, p.frame.P);
  return p;
}

using Fn = std::function<double(const std::vector<double>&)>;

inline double fd_grad(const Fn& f, std::vector<double> p, int i,
                      double h = 1e-6) {
  std::vector<double> a = p, b = p;
  a[i] += h;
  b[i] -= h;
  return (f(a) - f(b)) / (2.0 * h);
}

inline double fd_hess(const Fn& f, std::vector<double> p, int i, int j,
                      double h = 1e-4) {
  if (i == j) {
    std::vector<double> a = p, b = p;
    a[i] += h;
    b[i] -= h;
    return (f(a) - 2.0 * f(p) + f(b)) / (h * h);
  }
  std::vector<double> pp = p, pm = p, mp = p, mm = p;
  pp[i] += h;
  pp[j] += h;
  pm[i] += h;
  pm[j] -= h;
  mp[i] -= h;
  mp[j] += h;
  mm[i] -= h;
  mm[j] -= h;
  return (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
}

} // namespace testutil
