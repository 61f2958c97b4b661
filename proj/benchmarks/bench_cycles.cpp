#include "ocmg/lfa.hpp"
#include "ocmg/multigrid.hpp"
#include "ocmg/problems.hpp"

#include <benchmark/benchmark.h>

using namespace ocmg;

// One W-cycle on Example 1; Arg(0) = q, Arg(1): 0 = cjr, 1 = ibsr.
static void BM_WCycle(benchmark::State &state)
{
  const int q = static_cast<int>(state.range(0));
  const bool ibsr = state.range(1) == 1;
  const double alpha = 1e-6;
  const GridSpec g(q == 3 ? 243 : 256);
  const auto prob = example1(g, alpha);
  HierarchyOptions opts;
  if (ibsr)
  {
    opts.damping = DampingPolicy::fixed;
  }
  const auto kind = ibsr ? SmootherKind::ibsr : SmootherKind::cjr;
  const Hierarchy h(SaddleOperator(g, alpha), q, default_smoother(kind, q, alpha, g.h()), opts);
  const BlockField b = prob.data.rhs();
  BlockField v = random_block(g, 1);
  const CycleSpec spec;
  for (auto _ : state)
  {
    cycle(h, 0, v, b, spec);
    benchmark::DoNotOptimize(v.y.values().data());
  }
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_WCycle)
  ->Args({2, 0})
  ->Args({2, 1})
  ->Args({3, 0})
  ->Args({4, 0})
  ->Args({4, 1})
  ->Unit(benchmark::kMillisecond);

static void BM_LfaSampled(benchmark::State &state)
{
  const lfa::LfaParams p(static_cast<int>(state.range(0)), 1e-6, 1.0 / 256);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(lfa::optimize_sampled(lfa::Scheme::cjr, p).mu);
  }
}
BENCHMARK(BM_LfaSampled)->Arg(2)->Unit(benchmark::kMillisecond);
