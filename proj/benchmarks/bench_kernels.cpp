#include "ocmg/grid.hpp"
#include "ocmg/multigrid.hpp"
#include "ocmg/smoothers.hpp"
#include "ocmg/transfer.hpp"

#include <benchmark/benchmark.h>

using namespace ocmg;

static void BM_Laplacian(benchmark::State &state)
{
  const GridSpec g(static_cast<int>(state.range(0)));
  const ScalarField u = random_block(g, 1).y;
  ScalarField out(g);
  for (auto _ : state)
  {
    apply_laplacian(g, u.values(), out.values());
    benchmark::DoNotOptimize(out.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_Laplacian)->Arg(64)->Arg(256);

static void BM_Mass(benchmark::State &state)
{
  const GridSpec g(static_cast<int>(state.range(0)));
  const ScalarField u = random_block(g, 1).y;
  ScalarField out(g);
  for (auto _ : state)
  {
    apply_mass(g, u.values(), out.values());
    benchmark::DoNotOptimize(out.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_Mass)->Arg(64)->Arg(256);

static void BM_Residual(benchmark::State &state)
{
  const GridSpec g(static_cast<int>(state.range(0)));
  const SaddleOperator op(g, 1e-6);
  const BlockField v = random_block(g, 1);
  const BlockField b = random_block(g, 2);
  BlockField r(g);
  for (auto _ : state)
  {
    residual(op, b, v, r);
    benchmark::DoNotOptimize(r.y.values().data());
  }
}
BENCHMARK(BM_Residual)->Arg(256);

// Arg(1): 0 = cjr, 1 = ibsr (2 PCG), 2 = exact bsr.
static void BM_Smoother(benchmark::State &state)
{
  const GridSpec g(static_cast<int>(state.range(0)));
  const SaddleOperator op(g, 1e-6);
  const auto kind = state.range(1) == 0   ? SmootherKind::cjr
                    : state.range(1) == 1 ? SmootherKind::ibsr
                                          : SmootherKind::bsr_exact;
  const SmootherSpec s = default_smoother(kind, 2, 1e-6, g.h());
  const BlockField r = random_block(g, 3);
  BlockField out(g);
  for (auto _ : state)
  {
    smoother_apply(op, s, r, out);
    benchmark::DoNotOptimize(out.y.values().data());
  }
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Smoother)->Args({256, 0})->Args({256, 1})->Args({64, 2})->Unit(benchmark::kMicrosecond);

static void BM_RestrictProlong(benchmark::State &state)
{
  const int q = static_cast<int>(state.range(0));
  const GridSpec g(q == 3 ? 243 : 256);
  BlockField v = random_block(g, 4);
  for (auto _ : state)
  {
    const BlockField c = restrict_field(v, q);
    prolong_add(c, q, v);
    benchmark::DoNotOptimize(v.y.values().data());
  }
}
BENCHMARK(BM_RestrictProlong)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
