#ifndef OCMG_SSN_HPP
#define OCMG_SSN_HPP

#include "ocmg/grid.hpp"
#include "ocmg/multigrid.hpp"
#include "ocmg/problems.hpp"
#include "ocmg/smoothers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ocmg {

struct ControlParams
{
  double alpha = 1e-2;
  double beta = 0.0;
  double u0 = -1e9;
  double u1 = 1e9;

  /// Throws std::invalid_argument unless alpha > 0, beta >= 0, u0 < 0 < u1.
  void validate() const;
};

/// u = (1/alpha)[max(0,p-b) + min(0,p+b) - max(0,p-b-alpha u1) - min(0,p+b-alpha u0)]
double phi(double p, const ControlParams &cp);
ScalarField phi(const ScalarField &p, const ControlParams &cp);

/// alpha times the generalized derivative of phi, a 0/1 value per node.
/// Indicators include equality on both sides.
bool dphi_indicator(double p, const ControlParams &cp);
MaskField dphi_mask(const ScalarField &p, const ControlParams &cp);

/// Branch of phi that p falls on.
enum class ControlRegion
{
  zero,   // |p| <= beta: u = 0
  free,   // linear branch strictly inside the bounds
  lower,  // u = u0
  upper,  // u = u1
};
ControlRegion classify_control(double p, const ControlParams &cp);

/// F(y, p) = (L y - phi(p) - f, L p + y - g).
BlockField residual_F(const BlockField &v, const ProblemData &data, const ControlParams &cp);

struct SsnConfig
{
  double tol = 1e-10;
  int max_iters = 50;
  int max_halvings = 20;
  /// Per Jacobian solve; tolerance is relative to ||F|| (zero initial guess).
  CycleSpec mg;
  HierarchyOptions hierarchy;
};

struct SsnResult
{
  explicit SsnResult(const GridSpec &g) : v(g), u(g), mask(g) {}

  BlockField v;
  ScalarField u;
  MaskField mask;
  int iterations = 0;
  /// Multigrid cycles used by the beta = 0 unconstrained initial solve.
  int initial_mg_iters = 0;
  /// Multigrid cycles per Jacobian solve.
  std::vector<int> mg_iters;
  /// ||F_k|| / ||F(0,0)||, k = 0..iterations.
  std::vector<double> residual_history;
  std::vector<double> step_lengths;
  std::vector<std::size_t> active_counts;
  bool converged = false;
};

class SsnFailure : public std::runtime_error
{
public:
  SsnFailure(const std::string &what, int iteration, double rel_residual)
    : std::runtime_error(what), iteration_(iteration), rel_residual_(rel_residual)
  {
  }
  int iteration() const noexcept { return iteration_; }
  double rel_residual() const noexcept { return rel_residual_; }

private:
  int iteration_;
  double rel_residual_;
};

/// Semi-smooth Newton with backtracking (full step first, then halvings until
/// ||F|| decreases). Starts from the beta = 0 unconstrained solution; each
/// Jacobian system (masked (1,2) block) is solved by multigrid.
SsnResult ssn_solve(const ProblemData &data, const ControlParams &cp, int q,
                    const SmootherSpec &smoother, const SsnConfig &cfg = {});

} // namespace ocmg

#endif // OCMG_SSN_HPP
