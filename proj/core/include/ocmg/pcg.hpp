#ifndef OCMG_PCG_HPP
#define OCMG_PCG_HPP

#include "ocmg/grid.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ocmg {

/// out = A x; the two spans never alias.
using LinearMap = std::function<void(std::span<const double>, std::span<double>)>;

struct PcgConfig
{
  enum class Mode
  {
    fixed_count,  // run exactly max_iters iterations
    tolerance,    // stop at ||r|| <= rel_tol ||b|| (or max_iters)
  };

  Mode mode = Mode::tolerance;
  int max_iters = 1000;
  double rel_tol = 1e-12;
  /// Diagonal preconditioner entries; empty means no preconditioning.
  std::vector<double> diagonal;

  static PcgConfig fixed(int iters, std::vector<double> diag = {});
  static PcgConfig to_tolerance(double tol, int max_iters, std::vector<double> diag = {});
};

struct PcgResult
{
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

/// Zero curvature <Ap, p> <= 0 hit during the iteration.
class PcgBreakdown : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Preconditioned CG from a zero initial guess. x receives the iterate.
PcgResult pcg(const LinearMap &matvec, std::span<const double> b, std::span<double> x,
              const PcgConfig &cfg);

ScalarField pcg(const LinearMap &matvec, const ScalarField &b, const PcgConfig &cfg);

} // namespace ocmg

#endif // OCMG_PCG_HPP
