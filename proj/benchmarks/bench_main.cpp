#include <benchmark/benchmark.h>

#include "operlab/criteria.hpp"
#include "operlab/develop.hpp"

using namespace operlab;

static void BM_BuildChevalley(benchmark::State& state) {
  const char* names[] = {"A4", "F4", "E6"};
  LieType t = LieType::parse(names[state.range(0)]);
  for (auto _ : state) {
    auto a = build_chevalley(build_root_system(t));
    benchmark::DoNotOptimize(a.dim);
  }
}
BENCHMARK(BM_BuildChevalley)->Arg(0)->Arg(1)->Arg(2);

static void BM_AlgebraContext(benchmark::State& state) {
  for (auto _ : state) {
    auto ctx = AlgebraContext::build(LieType::parse("C3"));
    benchmark::DoNotOptimize(ctx->c_llll);
  }
}
BENCHMARK(BM_AlgebraContext);

static void BM_CriterionGeneral(benchmark::State& state) {
  auto ctx = AlgebraContext::build(LieType::parse("C3"));
  std::vector<Cx> a(ctx->n_levels, Cx(0.3, 0.1)), b(ctx->n_levels, Cx(0.1, -0.05));
  auto op = OperPoint::from_normalized(ctx, Cx(0.2, 0.1), a, b);
  for (auto _ : state) {
    auto rep = criterion_general(op);
    benchmark::DoNotOptimize(rep.margin);
  }
}
BENCHMARK(BM_CriterionGeneral);

static void BM_FrameTransport(benchmark::State& state) {
  auto ctx = AlgebraContext::build(LieType::parse("A2"));
  std::vector<DiskDifferential> tup;
  for (int d : ctx->degrees) {
    DiskDifferential x;
    x.degree = d;
    x.coeff = {Cx(0.2, 0.1), Cx(0.05, 0)};
    tup.push_back(x);
  }
  auto cf = make_connection(ctx, tup);
  for (auto _ : state) {
    auto fc = integrate_frame(cf, {Cx(0, 0), Cx(0.4, 0.2)}, 1e-9);
    benchmark::DoNotOptimize(fc.frames.back()(0, 0));
  }
}
BENCHMARK(BM_FrameTransport);

BENCHMARK_MAIN();
