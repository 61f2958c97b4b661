#include "ocmg/transfer.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocmg {

GridSpec coarsen(const GridSpec &fine, int q)
{
  if (q < 2)
  {
    throw std::invalid_argument("coarsen: q must be >= 2");
  }
  if (fine.N() % q != 0 || fine.N() / q < 2)
  {
    throw std::invalid_argument("coarsen: N=" + std::to_string(fine.N()) +
                                " cannot be coarsened by q=" + std::to_string(q));
  }
  return GridSpec(fine.N() / q);
}

ScalarField restrict_field(const ScalarField &fine, int q)
{
  const GridSpec cg = coarsen(fine.grid(), q);
  const int nf = fine.grid().n();
  const int nc = cg.n();
  const double q2 = static_cast<double>(q) * q;

  // Pass 1: restrict along i for every fine row j.
  std::vector<double> tmp(static_cast<std::size_t>(nf) * nc, 0.0);
  for (int j = 1; j <= nf; ++j)
  {
    for (int I = 1; I <= nc; ++I)
    {
      double s = 0.0;
      for (int k = -(q - 1); k <= q - 1; ++k)
      {
        const int i = q * I + k;  // always within 1..nf
        s += (q - std::abs(k)) * fine(i, j);
      }
      tmp[static_cast<std::size_t>(j - 1) * nc + (I - 1)] = s / q2;
    }
  }
  // Pass 2: along j.
  ScalarField out(cg);
  for (int J = 1; J <= nc; ++J)
  {
    for (int I = 1; I <= nc; ++I)
    {
      double s = 0.0;
      for (int k = -(q - 1); k <= q - 1; ++k)
      {
        const int j = q * J + k;
        s += (q - std::abs(k)) * tmp[static_cast<std::size_t>(j - 1) * nc + (I - 1)];
      }
      out(I, J) = s / q2;
    }
  }
  return out;
}

namespace {

// Linear interpolation weights: fine index i sits between coarse nodes
// lo = i / q and lo + 1 with offset k = i % q.
void prolong_into(const ScalarField &coarse, int q, std::span<double> out, bool add)
{
  const int nc = coarse.grid().n();
  const int Nf = coarse.grid().N() * q;
  const int nf = Nf - 1;
  const double inv_q = 1.0 / q;
  auto cval = [&](int I, int J) -> double {
    if (I < 1 || I > nc || J < 1 || J > nc)
    {
      return 0.0;
    }
    return coarse(I, J);
  };

  // Pass 1: interpolate along i on coarse rows J = 1..nc.
  std::vector<double> tmp(static_cast<std::size_t>(nc + 2) * nf, 0.0);
  for (int J = 1; J <= nc; ++J)
  {
    for (int i = 1; i <= nf; ++i)
    {
      const int lo = i / q;
      const int k = i % q;
      const double t = k * inv_q;
      tmp[static_cast<std::size_t>(J) * nf + (i - 1)] =
        (1.0 - t) * cval(lo, J) + (k ? t * cval(lo + 1, J) : 0.0);
    }
  }
  // Pass 2: along j; rows 0 and nc+1 of tmp are the zero boundary.
  for (int j = 1; j <= nf; ++j)
  {
    const int lo = j / q;
    const int k = j % q;
    const double t = k * inv_q;
    const double *r0 = tmp.data() + static_cast<std::size_t>(lo) * nf;
    const double *r1 = k ? tmp.data() + static_cast<std::size_t>(lo + 1) * nf : nullptr;
    double *o = out.data() + static_cast<std::size_t>(j - 1) * nf;
    for (int i = 0; i < nf; ++i)
    {
      const double v = (1.0 - t) * r0[i] + (r1 ? t * r1[i] : 0.0);
      o[i] = add ? o[i] + v : v;
    }
  }
}

} // namespace

ScalarField prolong_field(const ScalarField &coarse, int q)
{
  if (q < 2)
  {
    throw std::invalid_argument("prolong: q must be >= 2");
  }
  ScalarField out(GridSpec(coarse.grid().N() * q));
  prolong_into(coarse, q, out.values(), false);
  return out;
}

BlockField restrict_field(const BlockField &fine, int q)
{
  return BlockField(restrict_field(fine.y, q), restrict_field(fine.p, q));
}

BlockField prolong_field(const BlockField &coarse, int q)
{
  return BlockField(prolong_field(coarse.y, q), prolong_field(coarse.p, q));
}

void prolong_add(const BlockField &coarse, int q, BlockField &fine)
{
  if (fine.grid().N() != coarse.grid().N() * q)
  {
    throw std::invalid_argument("prolong_add: fine N must equal q * coarse N");
  }
  prolong_into(coarse.y, q, fine.y.values(), true);
  prolong_into(coarse.p, q, fine.p.values(), true);
}

} // namespace ocmg
