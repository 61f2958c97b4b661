#include "ocmg/pcg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ocmg {

PcgConfig PcgConfig::fixed(int iters, std::vector<double> diag)
{
  PcgConfig c;
  c.mode = Mode::fixed_count;
  c.max_iters = iters;
  c.diagonal = std::move(diag);
  return c;
}

PcgConfig PcgConfig::to_tolerance(double tol, int max_iters, std::vector<double> diag)
{
  PcgConfig c;
  c.mode = Mode::tolerance;
  c.rel_tol = tol;
  c.max_iters = max_iters;
  c.diagonal = std::move(diag);
  return c;
}

PcgResult pcg(const LinearMap &matvec, std::span<const double> b, std::span<double> x,
              const PcgConfig &cfg)
{
  const std::size_t n = b.size();
  if (x.size() != n || (!cfg.diagonal.empty() && cfg.diagonal.size() != n))
  {
    throw std::invalid_argument("pcg: size mismatch");
  }
  if (cfg.max_iters < 1)
  {
    throw std::invalid_argument("pcg: max_iters must be >= 1");
  }
  if (cfg.mode == PcgConfig::Mode::tolerance && !(cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0))
  {
    throw std::invalid_argument("pcg: rel_tol must lie in (0,1)");
  }

  std::fill(x.begin(), x.end(), 0.0);
  std::vector<double> r(b.begin(), b.end());
  std::vector<double> z(n);
  std::vector<double> p(n);
  std::vector<double> ap(n);

  auto precondition = [&](const std::vector<double> &in, std::vector<double> &out) {
    if (cfg.diagonal.empty())
    {
      std::copy(in.begin(), in.end(), out.begin());
      return;
    }
    for (std::size_t k = 0; k < n; ++k)
    {
      out[k] = in[k] / cfg.diagonal[k];
    }
  };

  PcgResult res;
  const double bnorm = norm2(b);
  if (bnorm == 0.0)
  {
    res.converged = true;
    return res;
  }

  precondition(r, z);
  p = z;
  double rz = dot(r, z);
  double rnorm = bnorm;

  const bool fixed = cfg.mode == PcgConfig::Mode::fixed_count;
  while (res.iterations < cfg.max_iters)
  {
    if (!fixed && rnorm <= cfg.rel_tol * bnorm)
    {
      break;
    }
    if (rnorm == 0.0)
    {
      break;
    }
    matvec(p, ap);
    const double curv = dot(p, ap);
    if (!(curv > 0.0))
    {
      throw PcgBreakdown("pcg: breakdown at iteration " + std::to_string(res.iterations) +
                         " (<Ap,p> = " + std::to_string(curv) + ")");
    }
    const double step = rz / curv;
    for (std::size_t k = 0; k < n; ++k)
    {
      x[k] += step * p[k];
      r[k] -= step * ap[k];
    }
    ++res.iterations;
    rnorm = norm2(r);

    precondition(r, z);
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t k = 0; k < n; ++k)
    {
      p[k] = z[k] + beta * p[k];
    }
  }
  res.rel_residual = rnorm / bnorm;
  res.converged = fixed || res.rel_residual <= cfg.rel_tol;
  return res;
}

ScalarField pcg(const LinearMap &matvec, const ScalarField &b, const PcgConfig &cfg)
{
  ScalarField x(b.grid());
  pcg(matvec, b.values(), x.values(), cfg);
  return x;
}

} // namespace ocmg
