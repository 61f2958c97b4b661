#include "ocmg/ssn.hpp"

#include <algorithm>
#include <cmath>

namespace ocmg {

void ControlParams::validate() const
{
  if (!(alpha > 0.0))
  {
    throw std::invalid_argument("ControlParams: alpha must be positive");
  }
  if (!(beta >= 0.0))
  {
    throw std::invalid_argument("ControlParams: beta must be non-negative");
  }
  if (!(u0 < 0.0 && u1 > 0.0))
  {
    throw std::invalid_argument("ControlParams: bounds must satisfy u0 < 0 < u1");
  }
}

double phi(double p, const ControlParams &cp)
{
  // Branch form of the four-term expression; identical for u0 < 0 < u1 and
  // monotone under rounding.
  if (p > cp.beta)
  {
    return std::min((p - cp.beta) / cp.alpha, cp.u1);
  }
  if (p < -cp.beta)
  {
    return std::max((p + cp.beta) / cp.alpha, cp.u0);
  }
  return 0.0;
}

ScalarField phi(const ScalarField &p, const ControlParams &cp)
{
  ScalarField u(p.grid());
  for (std::size_t k = 0; k < p.size(); ++k)
  {
    u[k] = phi(p[k], cp);
  }
  return u;
}

bool dphi_indicator(double p, const ControlParams &cp)
{
  const double b = cp.beta;
  const double a = cp.alpha;
  const int s = (p - b >= 0.0) + (p + b <= 0.0) - (p - b - a * cp.u1 >= 0.0) -
                (p + b - a * cp.u0 <= 0.0);
  return s > 0;
}

MaskField dphi_mask(const ScalarField &p, const ControlParams &cp)
{
  MaskField m(p.grid(), 0);
  for (std::size_t k = 0; k < p.size(); ++k)
  {
    m.set(k, dphi_indicator(p[k], cp));
  }
  return m;
}

ControlRegion classify_control(double p, const ControlParams &cp)
{
  if (p - cp.beta - cp.alpha * cp.u1 >= 0.0)
  {
    return ControlRegion::upper;
  }
  if (p + cp.beta - cp.alpha * cp.u0 <= 0.0)
  {
    return ControlRegion::lower;
  }
  if (std::abs(p) <= cp.beta)
  {
    return ControlRegion::zero;
  }
  return ControlRegion::free;
}

BlockField residual_F(const BlockField &v, const ProblemData &data, const ControlParams &cp)
{
  const GridSpec &g = data.grid;
  if (!(v.grid() == g))
  {
    throw std::invalid_argument("residual_F: grid mismatch");
  }
  BlockField F(g);
  apply_laplacian(g, v.y.values(), F.y.values());
  apply_laplacian(g, v.p.values(), F.p.values());
  for (std::size_t k = 0; k < g.size(); ++k)
  {
    F.y[k] -= phi(v.p[k], cp) + data.f[k];
    F.p[k] += v.y[k] - data.g[k];
  }
  return F;
}

namespace {

SolveResult solve_zero_guess(const SaddleOperator &op, int q, const SmootherSpec &smoother,
                             const SsnConfig &cfg, const BlockField &rhs)
{
  const Hierarchy hier(op, q, smoother, cfg.hierarchy);
  return solve_from(hier, rhs, BlockField(op.grid()), cfg.mg);
}

} // namespace

SsnResult ssn_solve(const ProblemData &data, const ControlParams &cp, int q,
                    const SmootherSpec &smoother, const SsnConfig &cfg)
{
  cp.validate();
  if (!(cfg.tol > 0.0) || cfg.max_iters < 1 || cfg.max_halvings < 0)
  {
    throw std::invalid_argument("ssn_solve: invalid configuration");
  }
  const GridSpec &grid = data.grid;
  SsnResult res(grid);

  // F(0,0) = -(f, g) because phi(0) = 0.
  const double f_ref = block_norm2(data.rhs());
  if (f_ref == 0.0)
  {
    res.converged = true;
    res.residual_history.push_back(0.0);
    res.mask = dphi_mask(res.v.p, cp);
    return res;
  }

  // Initial guess: unconstrained beta = 0 solution.
  {
    const SolveResult init = solve_zero_guess(SaddleOperator(grid, cp.alpha), q, smoother, cfg,
                                              data.rhs());
    if (!init.converged)
    {
      throw SsnFailure("ssn_solve: unconstrained initial solve did not converge", 0,
                       init.history.back() / init.history.front());
    }
    res.v = init.v;
    res.initial_mg_iters = init.iters;
  }

  BlockField F = residual_F(res.v, data, cp);
  double fnorm = block_norm2(F);
  res.residual_history.push_back(fnorm / f_ref);
  MaskField prev_mask(grid, 0);
  bool have_prev = false;

  // At least one Newton step is taken so that the affine case ends on a
  // Jacobian solve rather than on the initial guess.
  while (res.iterations < cfg.max_iters)
  {
    const MaskField mask = dphi_mask(res.v.p, cp);
    const SaddleOperator jac(grid, cp.alpha, mask);
    const SolveResult step = solve_zero_guess(jac, q, smoother, cfg, F);
    if (!step.converged)
    {
      throw SsnFailure("ssn_solve: Jacobian solve did not converge at SSN iteration " +
                         std::to_string(res.iterations + 1),
                       res.iterations, fnorm / f_ref);
    }
    res.mg_iters.push_back(step.iters);
    res.active_counts.push_back(mask.count());

    double t = 1.0;
    BlockField trial(grid);
    BlockField Ft(grid);
    double ftnorm = 0.0;
    bool accepted = false;
    for (int k = 0; k <= cfg.max_halvings; ++k, t *= 0.5)
    {
      trial = res.v;
      axpy(-t, step.v, trial);
      Ft = residual_F(trial, data, cp);
      ftnorm = block_norm2(Ft);
      if (ftnorm < fnorm)
      {
        accepted = true;
        break;
      }
    }
    ++res.iterations;
    if (!accepted)
    {
      // The forced first step found no descent below an already converged
      // residual (rounding floor).
      if (fnorm / f_ref <= cfg.tol)
      {
        res.step_lengths.push_back(0.0);
        res.residual_history.push_back(fnorm / f_ref);
        res.converged = true;
        break;
      }
      throw SsnFailure("ssn_solve: line search failed after " +
                         std::to_string(cfg.max_halvings) + " halvings at SSN iteration " +
                         std::to_string(res.iterations) +
                         " (relative residual " + std::to_string(fnorm / f_ref) + ")",
                       res.iterations, fnorm / f_ref);
    }

    const double step_norm = t * block_norm2(step.v);
    const double v_norm = block_norm2(res.v);
    res.v = std::move(trial);
    F = std::move(Ft);
    fnorm = ftnorm;
    res.step_lengths.push_back(t);
    res.residual_history.push_back(fnorm / f_ref);

    if (fnorm / f_ref <= cfg.tol)
    {
      res.converged = true;
      break;
    }
    // Negligible step with an unchanged active set.
    if (have_prev && mask == prev_mask && step_norm <= 1e-14 * std::max(1.0, v_norm))
    {
      res.converged = true;
      break;
    }
    prev_mask = mask;
    have_prev = true;
  }

  res.mask = dphi_mask(res.v.p, cp);
  res.u = phi(res.v.p, cp);
  return res;
}

} // namespace ocmg
