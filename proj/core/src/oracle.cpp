#include "ocmg/oracle.hpp"

#include <stdexcept>
#include <string>

namespace ocmg {

namespace {

void guard(const GridSpec &grid)
{
  if (grid.N() > kMaxDenseN)
  {
    throw std::invalid_argument("dense oracle: N=" + std::to_string(grid.N()) +
                                " exceeds the limit N<=" + std::to_string(kMaxDenseN));
  }
}

DenseMatrix stencil_laplacian(const GridSpec &grid)
{
  const int n = grid.n();
  const double s = 1.0 / (grid.h() * grid.h());
  const auto m = static_cast<Eigen::Index>(grid.size());
  DenseMatrix L = DenseMatrix::Zero(m, m);
  for (int j = 1; j <= n; ++j)
  {
    for (int i = 1; i <= n; ++i)
    {
      const auto r = static_cast<Eigen::Index>(grid.index(i, j));
      L(r, r) = 4.0 * s;
      const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (const auto &p : nb)
      {
        if (p[0] >= 1 && p[0] <= n && p[1] >= 1 && p[1] <= n)
        {
          L(r, static_cast<Eigen::Index>(grid.index(p[0], p[1]))) = -s;
        }
      }
    }
  }
  return L;
}

DenseMatrix stencil_mass(const GridSpec &grid)
{
  const int n = grid.n();
  const double s = grid.h() * grid.h() / 36.0;
  const double w[3][3] = {{1, 4, 1}, {4, 16, 4}, {1, 4, 1}};
  const auto m = static_cast<Eigen::Index>(grid.size());
  DenseMatrix Q = DenseMatrix::Zero(m, m);
  for (int j = 1; j <= n; ++j)
  {
    for (int i = 1; i <= n; ++i)
    {
      const auto r = static_cast<Eigen::Index>(grid.index(i, j));
      for (int dj = -1; dj <= 1; ++dj)
      {
        for (int di = -1; di <= 1; ++di)
        {
          const int ii = i + di;
          const int jj = j + dj;
          if (ii >= 1 && ii <= n && jj >= 1 && jj <= n)
          {
            Q(r, static_cast<Eigen::Index>(grid.index(ii, jj))) = s * w[dj + 1][di + 1];
          }
        }
      }
    }
  }
  return Q;
}

DenseMatrix coupling_diag(const SaddleOperator &op)
{
  const auto m = static_cast<Eigen::Index>(op.grid().size());
  DenseMatrix C = DenseMatrix::Identity(m, m);
  const auto c = op.coupling();
  if (!c.empty())
  {
    for (Eigen::Index k = 0; k < m; ++k)
    {
      C(k, k) = c[static_cast<std::size_t>(k)];
    }
  }
  return C;
}

DenseMatrix block2x2(const DenseMatrix &a11, const DenseMatrix &a12, const DenseMatrix &a21,
                     const DenseMatrix &a22)
{
  const Eigen::Index m = a11.rows();
  DenseMatrix A(2 * m, 2 * m);
  A.topLeftCorner(m, m) = a11;
  A.topRightCorner(m, m) = a12;
  A.bottomLeftCorner(m, m) = a21;
  A.bottomRightCorner(m, m) = a22;
  return A;
}

} // namespace

DenseMatrix assemble(DenseKind kind, const GridSpec &grid)
{
  guard(grid);
  switch (kind)
  {
    case DenseKind::laplacian:
      return stencil_laplacian(grid);
    case DenseKind::mass:
      return stencil_mass(grid);
    default:
      throw std::invalid_argument("assemble: block kinds need a SaddleOperator");
  }
}

DenseMatrix assemble(DenseKind kind, const SaddleOperator &op)
{
  const GridSpec &grid = op.grid();
  guard(grid);
  const auto m = static_cast<Eigen::Index>(grid.size());
  const DenseMatrix I = DenseMatrix::Identity(m, m);
  const double inv_alpha = 1.0 / op.alpha();

  switch (kind)
  {
    case DenseKind::laplacian:
    case DenseKind::mass:
      return assemble(kind, grid);
    case DenseKind::saddle:
    {
      const DenseMatrix L = stencil_laplacian(grid);
      return block2x2(L, -inv_alpha * coupling_diag(op), I, L);
    }
    case DenseKind::jacobi:
    {
      const DenseMatrix D = (4.0 / (grid.h() * grid.h())) * I;
      return block2x2(D, -inv_alpha * coupling_diag(op), I, D);
    }
    case DenseKind::braess:
    {
      const DenseMatrix C = stencil_mass(grid).inverse();
      return block2x2(C, -inv_alpha * coupling_diag(op), I, stencil_laplacian(grid));
    }
    case DenseKind::schur:
      return stencil_laplacian(grid) + inv_alpha * stencil_mass(grid) * coupling_diag(op);
  }
  throw std::invalid_argument("assemble: unknown kind");
}

DenseVector dense_solve(const DenseMatrix &M, const DenseVector &b)
{
  if (M.rows() != M.cols() || M.rows() != b.size())
  {
    throw std::invalid_argument("dense_solve: dimension mismatch");
  }
  Eigen::PartialPivLU<DenseMatrix> lu(M);
  if (!(lu.rcond() > 1e-15))
  {
    throw std::runtime_error("dense_solve: matrix is singular to working precision");
  }
  DenseVector x = lu.solve(b);
  const double bn = b.norm();
  const double rn = (M * x - b).norm();
  if (!x.allFinite() || (bn > 0.0 && !(rn <= 1e-10 * bn)))
  {
    throw std::runtime_error("dense_solve: residual check failed");
  }
  return x;
}

DenseVector flatten(const ScalarField &v)
{
  DenseVector x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
  {
    x[static_cast<Eigen::Index>(k)] = v[k];
  }
  return x;
}

DenseVector flatten(const BlockField &v)
{
  const auto m = static_cast<Eigen::Index>(v.y.size());
  DenseVector x(2 * m);
  x.head(m) = flatten(v.y);
  x.tail(m) = flatten(v.p);
  return x;
}

ScalarField unflatten_scalar(const GridSpec &grid, const DenseVector &x)
{
  if (x.size() != static_cast<Eigen::Index>(grid.size()))
  {
    throw std::invalid_argument("unflatten_scalar: size mismatch");
  }
  return ScalarField(grid, std::vector<double>(x.data(), x.data() + x.size()));
}

BlockField unflatten_block(const GridSpec &grid, const DenseVector &x)
{
  const auto m = static_cast<Eigen::Index>(grid.size());
  if (x.size() != 2 * m)
  {
    throw std::invalid_argument("unflatten_block: size mismatch");
  }
  return BlockField(unflatten_scalar(grid, x.head(m)), unflatten_scalar(grid, x.tail(m)));
}

DenseSaddleSolver::DenseSaddleSolver(const SaddleOperator &op)
  : grid_(op.grid()), lu_(assemble(DenseKind::saddle, op))
{
  if (!(lu_.rcond() > 1e-15))
  {
    throw std::runtime_error("DenseSaddleSolver: coarse operator is singular");
  }
}

BlockField DenseSaddleSolver::solve(const BlockField &b) const
{
  return unflatten_block(grid_, lu_.solve(flatten(b)));
}

} // namespace ocmg
