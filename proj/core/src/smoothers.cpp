#include "ocmg/smoothers.hpp"

#include <stdexcept>

namespace ocmg {

const char *to_string(SmootherKind k) noexcept
{
  switch (k)
  {
    case SmootherKind::cjr:
      return "cjr";
    case SmootherKind::bsr_exact:
      return "bsr";
    case SmootherKind::ibsr:
      return "ibsr";
  }
  return "?";
}

SmootherKind parse_smoother_kind(const std::string &s)
{
  if (s == "cjr")
  {
    return SmootherKind::cjr;
  }
  if (s == "bsr")
  {
    return SmootherKind::bsr_exact;
  }
  if (s == "ibsr")
  {
    return SmootherKind::ibsr;
  }
  throw std::invalid_argument("unknown scheme '" + s + "' (expected cjr, bsr or ibsr)");
}

void SmootherSpec::validate() const
{
  if (!(omega > 0.0))
  {
    throw std::invalid_argument("SmootherSpec: omega must be positive");
  }
  if (pcg_iters < 1)
  {
    throw std::invalid_argument("SmootherSpec: pcg_iters must be >= 1");
  }
  if (!(exact_tol > 0.0 && exact_tol < 1.0))
  {
    throw std::invalid_argument("SmootherSpec: exact_tol must lie in (0,1)");
  }
}

void cjr_apply(const SaddleOperator &op, double omega, const BlockField &r, BlockField &out)
{
  const GridSpec &g = op.grid();
  if (!(r.grid() == g) || !(out.grid() == g))
  {
    throw std::invalid_argument("cjr_apply: grid mismatch");
  }
  const double d = 4.0 / (g.h() * g.h());
  const double inv_d = 1.0 / d;
  const double inv_alpha = 1.0 / op.alpha();
  const auto c = op.coupling();
  const std::size_t m = g.size();
  for (std::size_t k = 0; k < m; ++k)
  {
    const double ck = c.empty() ? 1.0 : c[k];
    const double wg = (r.p[k] - inv_d * r.y[k]) / (d + inv_d * ck * inv_alpha);
    const double wf = inv_d * (r.y[k] + ck * wg * inv_alpha);
    out.y[k] = omega * wf;
    out.p[k] = omega * wg;
  }
}

BlockField cjr_apply(const BlockField &r, const SaddleOperator &op, double omega)
{
  BlockField out(op.grid());
  cjr_apply(op, omega, r, out);
  return out;
}

namespace {

// out = L w + Q (c o w) / alpha; tmp is scratch of the same size.
void schur_kernel(const SaddleOperator &op, std::span<const double> w, std::span<double> out,
                  std::vector<double> &tmp, std::vector<double> &tmp2)
{
  const GridSpec &g = op.grid();
  const auto c = op.coupling();
  const std::size_t m = g.size();
  apply_laplacian(g, w, out);
  if (c.empty())
  {
    apply_mass(g, w, tmp2);
  }
  else
  {
    for (std::size_t k = 0; k < m; ++k)
    {
      tmp[k] = c[k] * w[k];
    }
    apply_mass(g, tmp, tmp2);
  }
  const double inv_alpha = 1.0 / op.alpha();
  for (std::size_t k = 0; k < m; ++k)
  {
    out[k] += inv_alpha * tmp2[k];
  }
}

} // namespace

ScalarField schur_apply(const ScalarField &w, const SaddleOperator &op)
{
  if (!(w.grid() == op.grid()))
  {
    throw std::invalid_argument("schur_apply: grid mismatch");
  }
  ScalarField out(op.grid());
  std::vector<double> tmp(w.size());
  std::vector<double> tmp2(w.size());
  schur_kernel(op, w.values(), out.values(), tmp, tmp2);
  return out;
}

std::vector<double> schur_diagonal(const SaddleOperator &op)
{
  const GridSpec &g = op.grid();
  const double h2 = g.h() * g.h();
  const double dl = 4.0 / h2;
  const double dq = 16.0 * h2 / 36.0 / op.alpha();
  const auto c = op.coupling();
  std::vector<double> diag(g.size(), dl + dq);
  if (!c.empty())
  {
    for (std::size_t k = 0; k < diag.size(); ++k)
    {
      diag[k] = dl + dq * c[k];
    }
  }
  return diag;
}

void bsr_apply(const SaddleOperator &op, const SmootherSpec &spec, const BlockField &r,
               BlockField &out)
{
  const GridSpec &g = op.grid();
  if (!(r.grid() == g) || !(out.grid() == g))
  {
    throw std::invalid_argument("bsr_apply: grid mismatch");
  }
  const std::size_t m = g.size();
  const auto c = op.coupling();
  const double inv_alpha = 1.0 / op.alpha();

  // Stage 1: w_g from the Schur system, rhs = r_g - Q r_f.
  std::vector<double> rhs(m);
  apply_mass(g, r.y.values(), rhs);
  for (std::size_t k = 0; k < m; ++k)
  {
    rhs[k] = r.p[k] - rhs[k];
  }

  std::vector<double> tmp(m);
  std::vector<double> tmp2(m);
  const LinearMap matvec = [&](std::span<const double> x, std::span<double> y) {
    schur_kernel(op, x, y, tmp, tmp2);
  };
  PcgConfig cfg = spec.kind == SmootherKind::ibsr
                    ? PcgConfig::fixed(spec.pcg_iters, schur_diagonal(op))
                    : PcgConfig::to_tolerance(spec.exact_tol, spec.exact_max_iters,
                                              schur_diagonal(op));
  const PcgResult res = pcg(matvec, rhs, out.p.values(), cfg);
  if (!res.converged)
  {
    throw std::runtime_error("bsr_apply: Schur solve did not reach tolerance (rel. residual " +
                             std::to_string(res.rel_residual) + ")");
  }

  // Stage 2: w_f = Q (r_f + M w_g / alpha).
  for (std::size_t k = 0; k < m; ++k)
  {
    const double ck = c.empty() ? 1.0 : c[k];
    tmp[k] = r.y[k] + ck * out.p[k] * inv_alpha;
  }
  apply_mass(g, tmp, out.y.values());

  for (std::size_t k = 0; k < m; ++k)
  {
    out.y[k] *= spec.omega;
    out.p[k] *= spec.omega;
  }
}

BlockField bsr_apply(const BlockField &r, const SaddleOperator &op, const SmootherSpec &spec)
{
  BlockField out(op.grid());
  bsr_apply(op, spec, r, out);
  return out;
}

void smoother_apply(const SaddleOperator &op, const SmootherSpec &spec, const BlockField &r,
                    BlockField &out)
{
  if (spec.kind == SmootherKind::cjr)
  {
    cjr_apply(op, spec.omega, r, out);
  }
  else
  {
    bsr_apply(op, spec, r, out);
  }
}

BlockField smoother_apply(const BlockField &r, const SaddleOperator &op, const SmootherSpec &spec)
{
  BlockField out(op.grid());
  smoother_apply(op, spec, r, out);
  return out;
}

} // namespace ocmg
