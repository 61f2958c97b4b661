#include "ocmg/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ocmg {

namespace {

void require_size(std::size_t got, std::size_t want, const char *what)
{
  if (got != want)
  {
    throw std::invalid_argument(std::string(what) + ": size mismatch (" + std::to_string(got) +
                                " vs " + std::to_string(want) + ")");
  }
}

void require_same_grid(const GridSpec &a, const GridSpec &b, const char *what)
{
  if (!(a == b))
  {
    throw std::invalid_argument(std::string(what) + ": grid mismatch (N=" +
                                std::to_string(a.N()) + " vs N=" + std::to_string(b.N()) + ")");
  }
}

// 4*row[i] + row[i-1] + row[i+1] with zeros beyond the row ends.
inline double mass_row(const double *row, int i, int n)
{
  double s = 4.0 * row[i];
  if (i > 0)
  {
    s += row[i - 1];
  }
  if (i < n - 1)
  {
    s += row[i + 1];
  }
  return s;
}

} // namespace

GridSpec::GridSpec(int N) : N_(N), h_(0.0)
{
  if (N < 2)
  {
    throw std::invalid_argument("GridSpec: N must be >= 2, got " + std::to_string(N));
  }
  h_ = 1.0 / static_cast<double>(N);
}

ScalarField::ScalarField(const GridSpec &grid, double fill)
  : grid_(grid), values_(grid.size(), fill)
{
}

ScalarField::ScalarField(const GridSpec &grid, std::vector<double> values)
  : grid_(grid), values_(std::move(values))
{
  require_size(values_.size(), grid_.size(), "ScalarField");
}

void ScalarField::fill(double v)
{
  std::fill(values_.begin(), values_.end(), v);
}

BlockField::BlockField(ScalarField y_, ScalarField p_) : y(std::move(y_)), p(std::move(p_))
{
  require_same_grid(y.grid(), p.grid(), "BlockField");
}

MaskField::MaskField(const GridSpec &grid, std::uint8_t fill)
  : grid_(grid), values_(grid.size(), fill ? 1 : 0)
{
}

MaskField::MaskField(const GridSpec &grid, std::vector<std::uint8_t> values)
  : grid_(grid), values_(std::move(values))
{
  require_size(values_.size(), grid_.size(), "MaskField");
  for (auto v : values_)
  {
    if (v > 1)
    {
      throw std::invalid_argument("MaskField: entries must be 0 or 1");
    }
  }
}

std::size_t MaskField::count() const noexcept
{
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), std::uint8_t{1}));
}

SaddleOperator::SaddleOperator(const GridSpec &grid, double alpha) : grid_(grid), alpha_(alpha)
{
  if (!(alpha > 0.0) || !std::isfinite(alpha))
  {
    throw std::invalid_argument("SaddleOperator: alpha must be positive and finite");
  }
}

SaddleOperator::SaddleOperator(const GridSpec &grid, double alpha, const MaskField &mask)
  : SaddleOperator(grid, alpha)
{
  require_same_grid(grid, mask.grid(), "SaddleOperator mask");
  std::vector<double> c(mask.size());
  for (std::size_t k = 0; k < c.size(); ++k)
  {
    c[k] = mask[k];
  }
  coupling_ = std::move(c);
}

SaddleOperator SaddleOperator::with_coupling(const GridSpec &grid, double alpha,
                                             std::vector<double> weights)
{
  SaddleOperator op(grid, alpha);
  require_size(weights.size(), grid.size(), "SaddleOperator coupling");
  for (double w : weights)
  {
    if (!(w >= 0.0 && w <= 1.0))
    {
      throw std::invalid_argument("SaddleOperator: coupling weights must lie in [0,1]");
    }
  }
  op.coupling_ = std::move(weights);
  return op;
}

void apply_laplacian(const GridSpec &grid, std::span<const double> u, std::span<double> out)
{
  require_size(u.size(), grid.size(), "apply_laplacian");
  require_size(out.size(), grid.size(), "apply_laplacian");
  const int n = grid.n();
  const double s = 1.0 / (grid.h() * grid.h());
  const std::vector<double> zeros(static_cast<std::size_t>(n), 0.0);

  for (int j = 0; j < n; ++j)
  {
    const double *row = u.data() + static_cast<std::size_t>(j) * n;
    const double *below = j > 0 ? row - n : zeros.data();
    const double *above = j < n - 1 ? row + n : zeros.data();
    double *o = out.data() + static_cast<std::size_t>(j) * n;
    if (n == 1)
    {
      o[0] = s * (4.0 * row[0] - below[0] - above[0]);
      continue;
    }
    o[0] = s * (4.0 * row[0] - row[1] - below[0] - above[0]);
    for (int i = 1; i < n - 1; ++i)
    {
      o[i] = s * (4.0 * row[i] - row[i - 1] - row[i + 1] - below[i] - above[i]);
    }
    o[n - 1] = s * (4.0 * row[n - 1] - row[n - 2] - below[n - 1] - above[n - 1]);
  }
}

void apply_mass(const GridSpec &grid, std::span<const double> u, std::span<double> out)
{
  require_size(u.size(), grid.size(), "apply_mass");
  require_size(out.size(), grid.size(), "apply_mass");
  const int n = grid.n();
  const double s = grid.h() * grid.h() / 36.0;

  for (int j = 0; j < n; ++j)
  {
    const double *row = u.data() + static_cast<std::size_t>(j) * n;
    const double *below = j > 0 ? row - n : nullptr;
    const double *above = j < n - 1 ? row + n : nullptr;
    double *o = out.data() + static_cast<std::size_t>(j) * n;
    for (int i = 0; i < n; ++i)
    {
      double acc = 4.0 * mass_row(row, i, n);
      if (below)
      {
        acc += mass_row(below, i, n);
      }
      if (above)
      {
        acc += mass_row(above, i, n);
      }
      o[i] = s * acc;
    }
  }
}

void apply_saddle(const SaddleOperator &op, const BlockField &v, BlockField &out)
{
  const GridSpec &g = op.grid();
  require_same_grid(g, v.grid(), "apply_saddle");
  require_same_grid(g, out.grid(), "apply_saddle");
  apply_laplacian(g, v.y.values(), out.y.values());
  apply_laplacian(g, v.p.values(), out.p.values());

  const double inv_alpha = 1.0 / op.alpha();
  const auto c = op.coupling();
  const std::size_t m = g.size();
  for (std::size_t k = 0; k < m; ++k)
  {
    const double pk = c.empty() ? v.p[k] : c[k] * v.p[k];
    out.y[k] -= pk * inv_alpha;
    out.p[k] += v.y[k];
  }
}

void residual(const SaddleOperator &op, const BlockField &b, const BlockField &v, BlockField &out)
{
  require_same_grid(op.grid(), b.grid(), "residual");
  apply_saddle(op, v, out);
  const std::size_t m = op.grid().size();
  for (std::size_t k = 0; k < m; ++k)
  {
    out.y[k] = b.y[k] - out.y[k];
    out.p[k] = b.p[k] - out.p[k];
  }
}

ScalarField apply_laplacian(const ScalarField &u, const GridSpec &grid)
{
  require_same_grid(u.grid(), grid, "apply_laplacian");
  ScalarField out(grid);
  apply_laplacian(grid, u.values(), out.values());
  return out;
}

ScalarField apply_mass(const ScalarField &u, const GridSpec &grid)
{
  require_same_grid(u.grid(), grid, "apply_mass");
  ScalarField out(grid);
  apply_mass(grid, u.values(), out.values());
  return out;
}

BlockField apply_saddle(const SaddleOperator &op, const BlockField &v)
{
  BlockField out(op.grid());
  apply_saddle(op, v, out);
  return out;
}

BlockField residual(const SaddleOperator &op, const BlockField &b, const BlockField &v)
{
  BlockField out(op.grid());
  residual(op, b, v, out);
  return out;
}

double block_norm2(const BlockField &v)
{
  const double sy = dot(v.y.values(), v.y.values());
  const double sp = dot(v.p.values(), v.p.values());
  return std::sqrt(sy + sp);
}

double dot(std::span<const double> a, std::span<const double> b)
{
  require_size(a.size(), b.size(), "dot");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a)
{
  return std::sqrt(dot(a, a));
}

void axpy(double a, std::span<const double> x, std::span<double> y)
{
  require_size(x.size(), y.size(), "axpy");
  for (std::size_t k = 0; k < x.size(); ++k)
  {
    y[k] += a * x[k];
  }
}

void axpy(double a, const BlockField &x, BlockField &y)
{
  axpy(a, x.y.values(), y.y.values());
  axpy(a, x.p.values(), y.p.values());
}

} // namespace ocmg
