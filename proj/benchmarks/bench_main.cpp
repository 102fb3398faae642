#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "geovec/axis_search.hpp"
#include "geovec/existence.hpp"
#include "geovec/lie_algebra.hpp"
#include "geovec/metric.hpp"
#include "geovec/milnor3d.hpp"
#include "geovec/residuals.hpp"

using namespace geovec;

namespace {

LieAlgebra so3_plus_r() {
  return LieAlgebra(4, {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
}

Eigen::VectorXd vec4(double a, double b, double c, double d) {
  Eigen::VectorXd v(4);
  v << a, b, c, d;
  return v;
}

void BM_Bracket(benchmark::State& state) {
  const LieAlgebra a = so3_plus_r();
  const Eigen::VectorXd u = vec4(1, 2, 3, 4), v = vec4(-1, 0.5, 2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(a.bracket(u, v));
}
BENCHMARK(BM_Bracket);

void BM_KillingForm(benchmark::State& state) {
  const LieAlgebra a = so3_plus_r();
  for (auto _ : state) benchmark::DoNotOptimize(killing_form(a));
}
BENCHMARK(BM_KillingForm);

void BM_KropinaResidual(benchmark::State& state) {
  const ReductiveSpace s = ReductiveSpace::lie_group(so3_plus_r());
  const InnerProduct ip = InnerProduct::identity(4);
  const Eigen::VectorXd x = vec4(0.6, 0, 0, 0.8), y = vec4(1, 0.2, -0.4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kropina_residual(s, ip, x, y));
}
BENCHMARK(BM_KropinaResidual);

void BM_FundamentalTensorKropina(benchmark::State& state) {
  const InnerProduct ip = InnerProduct::identity(4);
  const MetricSpec m = MetricSpec::kropina(ip, vec4(0.6, 0, 0, 0.8));
  const Eigen::VectorXd y = vec4(1, 0.2, -0.4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_tensor(m, y));
}
BENCHMARK(BM_FundamentalTensorKropina);

void BM_FinslerResidual(benchmark::State& state) {
  const ReductiveSpace s = ReductiveSpace::lie_group(so3_plus_r());
  const InnerProduct ip = InnerProduct::identity(4);
  const MetricSpec m = MetricSpec::kropina(ip, vec4(0.6, 0, 0, 0.8));
  const Eigen::VectorXd y = vec4(1, 0.2, -0.4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(finsler_residual(s, m, y));
}
BENCHMARK(BM_FinslerResidual);

void BM_KropinaExistenceCase3(benchmark::State& state) {
  const ReductiveSpace s = ReductiveSpace::lie_group(so3_plus_r());
  const InnerProduct ip = InnerProduct::identity(4);
  const Eigen::VectorXd x = vec4(0.6, 0, 0, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(kropina_existence(s, ip, x));
}
BENCHMARK(BM_KropinaExistenceCase3);

void BM_FindAxes3D(benchmark::State& state) {
  const MilnorBuild mb = build(NonUnimodularParams{2, 2, 1, -1});
  const ReductiveSpace s = ReductiveSpace::lie_group(mb.algebra);
  const MetricSpec m = MetricSpec::riemannian(mb.inner);
  SearchConfig cfg;
  cfg.samples = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_geodesic_vectors(s, m, cfg));
}
BENCHMARK(BM_FindAxes3D)->Arg(400)->Arg(4000)->Arg(20000);

void BM_Classify3D(benchmark::State& state) {
  SearchConfig cfg;
  cfg.samples = 400;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        classify3d({2, 2, 1, -1}, MetricFamily::Riemannian, {}, cfg));
}
BENCHMARK(BM_Classify3D);

}  // namespace

BENCHMARK_MAIN();
