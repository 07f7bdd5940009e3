// Throughput of the layers the per-point pipeline is built from, plus the
// pipeline itself, on representative built-in charts.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "papm/checks.hpp"
#include "papm/expr.hpp"
#include "papm/fixtures.hpp"
#include "papm/geometry.hpp"
#include "papm/manifold.hpp"

namespace {

const std::vector<std::string> kCoords = {"x1", "x2", "x3", "x4"};
const std::vector<double> kPoint = {0.4, -0.7, 0.9, 0.3};

void BM_expression_jet(benchmark::State& state) {
  papm::ExprPtr e = papm::parse_expression(
      "sin(x1) * exp(x2) + x3^3 / (1 + x4^2) - sqrt(1 + x1^2)", kCoords);
  for (auto _ : state)
    benchmark::DoNotOptimize(e->evaluate_jet2(kPoint));
}
BENCHMARK(BM_expression_jet);

void BM_expression_value(benchmark::State& state) {
  papm::ExprPtr e = papm::parse_expression(
      "sin(x1) * exp(x2) + x3^3 / (1 + x4^2) - sqrt(1 + x1^2)", kCoords);
  for (auto _ : state)
    benchmark::DoNotOptimize(e->evaluate_value(kPoint));
}
BENCHMARK(BM_expression_value);

void BM_frame(benchmark::State& state, const char* name) {
  papm::ManifoldSpec spec = papm::load_spec(papm::fixture(name).json);
  const std::vector<double>& pt = spec.sample_points.back();
  for (auto _ : state)
    benchmark::DoNotOptimize(papm::evaluate_frame(spec, pt));
}
BENCHMARK_CAPTURE(BM_frame, sphere, "sphere_patch");
BENCHMARK_CAPTURE(BM_frame, heisenberg, "heisenberg");

void BM_curvature(benchmark::State& state, const char* name) {
  papm::ManifoldSpec spec = papm::load_spec(papm::fixture(name).json);
  papm::PointFrame frame =
      papm::evaluate_frame(spec, spec.sample_points.back());
  for (auto _ : state) {
    papm::LeviCivitaData lc = papm::christoffel(frame);
    benchmark::DoNotOptimize(papm::riemann(frame, lc));
  }
}
BENCHMARK_CAPTURE(BM_curvature, sphere, "sphere_patch");
BENCHMARK_CAPTURE(BM_curvature, heisenberg, "heisenberg");

void BM_run_point(benchmark::State& state, const char* name) {
  papm::ManifoldSpec spec = papm::load_spec(papm::fixture(name).json);
  papm::RunOptions opts;
  int last = static_cast<int>(spec.sample_points.size()) - 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(papm::run_point(spec, last, opts));
}
BENCHMARK_CAPTURE(BM_run_point, flat, "flat_product");
BENCHMARK_CAPTURE(BM_run_point, rotating_4d, "rotating_4d");
BENCHMARK_CAPTURE(BM_run_point, heisenberg, "heisenberg");

} // namespace

BENCHMARK_MAIN();
