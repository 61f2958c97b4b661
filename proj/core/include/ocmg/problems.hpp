#ifndef OCMG_PROBLEMS_HPP
#define OCMG_PROBLEMS_HPP

#include "ocmg/grid.hpp"

namespace ocmg {

/// Source f and target state g sampled at interior nodes.
struct ProblemData
{
  explicit ProblemData(const GridSpec &g) : grid(g), f(g), g(g) {}

  GridSpec grid;
  ScalarField f;
  ScalarField g;

  /// Right-hand side (f, g) of the block system.
  BlockField rhs() const { return BlockField(f, g); }
};

/// Manufactured smooth solution of the unconstrained system:
///   y = sin(2 pi x1) sin(2 pi x2) exp(x1 + x2)
///   p = sin(2 pi x1) sin(2 pi x2) exp(x1 - x2)
/// with f = -Lap y - p/alpha and g = -Lap p + y evaluated exactly.
struct ManufacturedProblem
{
  ProblemData data;
  BlockField exact;
};

ManufacturedProblem example1(const GridSpec &grid, double alpha);

/// f = 0, g = sin(2 pi x1) sin(2 pi x2) exp(2 x1) / 6.
ProblemData example2(const GridSpec &grid);

/// sqrt(h^2 * sum v_k^2) over both components: discrete L2(Omega) norm.
double l2_norm_h(const BlockField &v);

} // namespace ocmg

#endif // OCMG_PROBLEMS_HPP
