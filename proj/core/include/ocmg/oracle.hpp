#ifndef OCMG_ORACLE_HPP
#define OCMG_ORACLE_HPP

// Dense reference assemblies for tiny grids. Every matrix here is built
// directly from the stencil definitions, never by probing the matrix-free
// kernels, so the two paths check each other. The same dense LU doubles as the
// coarsest-level solver of the multigrid hierarchy.

#include "ocmg/grid.hpp"

#include <Eigen/Dense>

namespace ocmg {

/// Largest N accepted by the dense path: 2(N-1)^2 = 1058 unknowns.
inline constexpr int kMaxDenseN = 24;

using DenseMatrix = Eigen::MatrixXd;
using DenseVector = Eigen::VectorXd;

enum class DenseKind
{
  laplacian,  // L_h
  mass,       // Q_h
  saddle,     // A_h (masked when the operator carries a mask)
  jacobi,     // B_J = [D, -M/alpha; I, D], D = diag(L_h)
  braess,     // B_m = [Q^{-1}, -M/alpha; I, L_h]
  schur,      // L_h + Q_h M / alpha
};

/// Scalar kinds (laplacian, mass) ignore alpha and the mask.
DenseMatrix assemble(DenseKind kind, const SaddleOperator &op);
DenseMatrix assemble(DenseKind kind, const GridSpec &grid);

/// Partial-pivoting LU solve; throws on (numerical) singularity or when the
/// relative residual exceeds 1e-10.
DenseVector dense_solve(const DenseMatrix &M, const DenseVector &b);

DenseVector flatten(const BlockField &v);
DenseVector flatten(const ScalarField &v);
BlockField unflatten_block(const GridSpec &grid, const DenseVector &x);
ScalarField unflatten_scalar(const GridSpec &grid, const DenseVector &x);

/// Factor-once direct solver for A_h.
class DenseSaddleSolver
{
public:
  explicit DenseSaddleSolver(const SaddleOperator &op);

  BlockField solve(const BlockField &b) const;
  const GridSpec &grid() const noexcept { return grid_; }

private:
  GridSpec grid_;
  Eigen::PartialPivLU<DenseMatrix> lu_;
};

} // namespace ocmg

#endif // OCMG_ORACLE_HPP
