#ifndef OCMG_MULTIGRID_HPP
#define OCMG_MULTIGRID_HPP

#include "ocmg/grid.hpp"
#include "ocmg/oracle.hpp"
#include "ocmg/smoothers.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace ocmg {

enum class CycleType
{
  V,
  W,
};

struct CycleSpec
{
  CycleType cycle = CycleType::W;
  int nu_pre = 1;
  int nu_post = 0;  // no post-smoothing; any other value is rejected
  double tol = 1e-10;
  int max_iters = 500;
  std::uint64_t seed = 1;

  void validate() const;
};

/// How the smoother damping is chosen on each level.
enum class DampingPolicy
{
  /// spec.omega on every level.
  fixed,
  /// CJR only: closed-form optimal omega for the level's h and alpha.
  cjr_level_optimal,
};

/// How a masked (1,2) block is carried to coarser levels.
enum class CouplingTransfer
{
  full_weighting,  // restricted weights in [0,1]
  injection,       // coarse node takes the coincident fine flag
};

struct HierarchyOptions
{
  DampingPolicy damping = DampingPolicy::cjr_level_optimal;
  CouplingTransfer coupling = CouplingTransfer::full_weighting;
  /// Coarsen while q | N and N/q >= min_coarse_N.
  int min_coarse_N = 8;
};

/// Default per-scheme damping: cjr_optimal on the finest grid for CJR, the
/// fixed per-q constant for BSR/IBSR.
SmootherSpec default_smoother(SmootherKind kind, int q, double alpha, double h, int pcg_iters = 2);

/// Level sizes produced by the coarsening rule, finest first.
std::vector<int> level_sizes(int N, int q, int min_coarse_N = 8);

class Hierarchy
{
public:
  struct Level
  {
    SaddleOperator op;
    SmootherSpec smoother;
  };

  Hierarchy(const SaddleOperator &fine, int q, const SmootherSpec &smoother,
            const HierarchyOptions &opts = {});

  int q() const noexcept { return q_; }
  std::size_t num_levels() const noexcept { return levels_.size(); }
  std::size_t coarsest() const noexcept { return levels_.size() - 1; }
  const Level &level(std::size_t l) const { return levels_.at(l); }
  const DenseSaddleSolver &coarse_solver() const noexcept { return *coarse_; }

private:
  int q_;
  std::vector<Level> levels_;
  std::shared_ptr<const DenseSaddleSolver> coarse_;
};

/// One V- or W-cycle on `level` with nu_pre pre-smoothing steps, no
/// post-smoothing and a direct solve on the coarsest level. Updates v.
void cycle(const Hierarchy &hier, std::size_t level, BlockField &v, const BlockField &b,
           const CycleSpec &spec);

struct SolveResult
{
  explicit SolveResult(const GridSpec &g) : v(g) {}

  BlockField v;
  int iters = 0;
  /// (||r_k|| / ||r_0||)^(1/k) at the stopping iteration.
  double rho = 0.0;
  /// ||r_k||_2 for k = 0..iters.
  std::vector<double> history;
  bool converged = false;
};

/// Cycles from a random initial guess in (0,1) drawn from spec.seed until
/// ||r_k|| <= tol ||r_0|| or max_iters.
SolveResult solve(const Hierarchy &hier, const BlockField &b, const CycleSpec &spec);
/// Same, from a caller-supplied initial guess.
SolveResult solve_from(const Hierarchy &hier, const BlockField &b, BlockField v0,
                       const CycleSpec &spec);

BlockField random_block(const GridSpec &grid, std::uint64_t seed);

/// ln(rho_s) / ln(rho_j): iteration-count ratio between two solvers.
double eta_ratio(double rho_s, double rho_j);

} // namespace ocmg

#endif // OCMG_MULTIGRID_HPP
