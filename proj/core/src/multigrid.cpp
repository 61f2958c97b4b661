#include "ocmg/multigrid.hpp"

#include "ocmg/lfa.hpp"
#include "ocmg/transfer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace ocmg {

void CycleSpec::validate() const
{
  if (nu_pre < 1)
  {
    throw std::invalid_argument("CycleSpec: nu_pre must be >= 1");
  }
  if (nu_post != 0)
  {
    throw std::invalid_argument("CycleSpec: post-smoothing is not supported (nu_post must be 0)");
  }
  if (!(tol > 0.0 && tol < 1.0))
  {
    throw std::invalid_argument("CycleSpec: tol must lie in (0,1)");
  }
  if (max_iters < 1)
  {
    throw std::invalid_argument("CycleSpec: max_iters must be >= 1");
  }
}

SmootherSpec default_smoother(SmootherKind kind, int q, double alpha, double h, int pcg_iters)
{
  SmootherSpec s;
  s.kind = kind;
  s.pcg_iters = pcg_iters;
  if (kind == SmootherKind::cjr)
  {
    s.omega = lfa::cjr_optimal(lfa::LfaParams(q, alpha, h)).omega;
  }
  else
  {
    s.omega = lfa::bsr_damping(q).omega;
  }
  return s;
}

std::vector<int> level_sizes(int N, int q, int min_coarse_N)
{
  if (q < 2)
  {
    throw std::invalid_argument("level_sizes: q must be >= 2");
  }
  std::vector<int> sizes{N};
  while (N % q == 0 && N / q >= min_coarse_N && N / q >= 2)
  {
    N /= q;
    sizes.push_back(N);
  }
  return sizes;
}

namespace {

std::vector<double> restrict_coupling(const GridSpec &fine, std::span<const double> c, int q,
                                      CouplingTransfer how)
{
  const GridSpec cg = coarsen(fine, q);
  if (how == CouplingTransfer::full_weighting)
  {
    const ScalarField f(fine, std::vector<double>(c.begin(), c.end()));
    auto r = restrict_field(f, q);
    std::vector<double> out(r.values().begin(), r.values().end());
    for (double &w : out)
    {
      w = std::min(1.0, std::max(0.0, w));
    }
    return out;
  }
  std::vector<double> out(cg.size());
  for (int J = 1; J <= cg.n(); ++J)
  {
    for (int I = 1; I <= cg.n(); ++I)
    {
      out[cg.index(I, J)] = c[fine.index(q * I, q * J)];
    }
  }
  return out;
}

} // namespace

Hierarchy::Hierarchy(const SaddleOperator &fine, int q, const SmootherSpec &smoother,
                     const HierarchyOptions &opts)
  : q_(q)
{
  lfa::validate_q(q);
  smoother.validate();
  if (opts.damping == DampingPolicy::cjr_level_optimal && smoother.kind != SmootherKind::cjr)
  {
    throw std::invalid_argument("Hierarchy: level-optimal damping applies to CJR only");
  }

  const auto sizes = level_sizes(fine.grid().N(), q, opts.min_coarse_N);
  if (sizes.back() > kMaxDenseN)
  {
    throw std::invalid_argument("Hierarchy: N=" + std::to_string(fine.grid().N()) +
                                " with q=" + std::to_string(q) +
                                " does not coarsen to a directly solvable grid (coarsest N=" +
                                std::to_string(sizes.back()) + ")");
  }

  auto level_smoother = [&](const GridSpec &g) {
    SmootherSpec s = smoother;
    if (opts.damping == DampingPolicy::cjr_level_optimal)
    {
      s.omega = lfa::cjr_optimal(lfa::LfaParams(q, fine.alpha(), g.h())).omega;
    }
    return s;
  };

  levels_.push_back({fine, level_smoother(fine.grid())});
  for (std::size_t l = 1; l < sizes.size(); ++l)
  {
    const SaddleOperator &prev = levels_.back().op;
    const GridSpec g(sizes[l]);
    if (prev.has_mask())
    {
      levels_.push_back(
        {SaddleOperator::with_coupling(
           g, fine.alpha(), restrict_coupling(prev.grid(), prev.coupling(), q, opts.coupling)),
         level_smoother(g)});
    }
    else
    {
      levels_.push_back({SaddleOperator(g, fine.alpha()), level_smoother(g)});
    }
  }
  coarse_ = std::make_shared<const DenseSaddleSolver>(levels_.back().op);
}

void cycle(const Hierarchy &hier, std::size_t level, BlockField &v, const BlockField &b,
           const CycleSpec &spec)
{
  if (level > hier.coarsest())
  {
    throw std::out_of_range("cycle: invalid level");
  }
  if (level == hier.coarsest())
  {
    v = hier.coarse_solver().solve(b);
    return;
  }

  const auto &lv = hier.level(level);
  BlockField r(lv.op.grid());
  BlockField w(lv.op.grid());
  for (int s = 0; s < spec.nu_pre; ++s)
  {
    residual(lv.op, b, v, r);
    smoother_apply(lv.op, lv.smoother, r, w);
    axpy(1.0, w, v);
  }

  residual(lv.op, b, v, r);
  const BlockField rc = restrict_field(r, hier.q());
  BlockField ec(rc.grid());
  const int visits = spec.cycle == CycleType::W ? 2 : 1;
  for (int k = 0; k < visits; ++k)
  {
    cycle(hier, level + 1, ec, rc, spec);
  }
  prolong_add(ec, hier.q(), v);
}

BlockField random_block(const GridSpec &grid, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(std::nextafter(0.0, 1.0), 1.0);
  BlockField v(grid);
  for (auto &x : v.y.values())
  {
    x = dist(rng);
  }
  for (auto &x : v.p.values())
  {
    x = dist(rng);
  }
  return v;
}

SolveResult solve(const Hierarchy &hier, const BlockField &b, const CycleSpec &spec)
{
  return solve_from(hier, b, random_block(b.grid(), spec.seed), spec);
}

SolveResult solve_from(const Hierarchy &hier, const BlockField &b, BlockField v0,
                       const CycleSpec &spec)
{
  spec.validate();
  const auto &op = hier.level(0).op;
  if (!(b.grid() == op.grid()) || !(v0.grid() == op.grid()))
  {
    throw std::invalid_argument("solve: right-hand side / initial guess grid mismatch");
  }

  SolveResult res(op.grid());
  res.v = std::move(v0);
  BlockField r(op.grid());
  residual(op, b, res.v, r);
  const double r0 = block_norm2(r);
  res.history.push_back(r0);
  if (r0 == 0.0)
  {
    res.converged = true;
    return res;
  }

  while (res.iters < spec.max_iters)
  {
    cycle(hier, 0, res.v, b, spec);
    ++res.iters;
    residual(op, b, res.v, r);
    const double rk = block_norm2(r);
    res.history.push_back(rk);
    if (!std::isfinite(rk))
    {
      break;
    }
    if (rk <= spec.tol * r0)
    {
      res.converged = true;
      break;
    }
  }
  res.rho = std::pow(res.history.back() / r0, 1.0 / res.iters);
  return res;
}

double eta_ratio(double rho_s, double rho_j)
{
  auto ok = [](double x) { return x > 0.0 && x < 1.0; };
  if (!ok(rho_s) || !ok(rho_j))
  {
    throw std::invalid_argument("eta_ratio: convergence factors must lie in (0,1)");
  }
  return std::log(rho_s) / std::log(rho_j);
}

} // namespace ocmg
