#ifndef OCMG_SMOOTHERS_HPP
#define OCMG_SMOOTHERS_HPP

// Damped collective relaxations v <- v + omega B^{-1} (b - A v) for the saddle
// operator. B^{-1} r is evaluated by block elimination:
//
//   CJR  (B_J = [D, -M/alpha; I, D], D = diag(L_h) = 4/h^2):
//     w_g = (D + D^{-1} M / alpha)^{-1} (r_g - D^{-1} r_f)
//     w_f = D^{-1} (r_f + M w_g / alpha)
//
//   BSR  (B_m = [Q^{-1}, -M/alpha; I, L_h]):
//     (L_h + Q_h M / alpha) w_g = r_g - Q_h r_f     (Schur system)
//     w_f = Q_h (r_f + M w_g / alpha)
//
// The Schur system is solved by PCG with its exact diagonal as preconditioner:
// to 1e-12 (exact BSR) or with a fixed iteration count (IBSR).

#include "ocmg/grid.hpp"
#include "ocmg/pcg.hpp"

#include <string>
#include <vector>

namespace ocmg {

enum class SmootherKind
{
  cjr,
  bsr_exact,
  ibsr,
};

const char *to_string(SmootherKind k) noexcept;
SmootherKind parse_smoother_kind(const std::string &s);

struct SmootherSpec
{
  SmootherKind kind = SmootherKind::cjr;
  double omega = 0.8;
  int pcg_iters = 2;
  double exact_tol = 1e-12;
  int exact_max_iters = 20000;

  void validate() const;
};

/// omega * B_J^{-1} r.
BlockField cjr_apply(const BlockField &r, const SaddleOperator &op, double omega);
void cjr_apply(const SaddleOperator &op, double omega, const BlockField &r, BlockField &out);

/// L_h w + Q_h (M o w) / alpha.
ScalarField schur_apply(const ScalarField &w, const SaddleOperator &op);

/// diag(L_h + Q_h M / alpha) = 4/h^2 + (16 h^2 / 36) m / alpha.
std::vector<double> schur_diagonal(const SaddleOperator &op);

/// omega * B_m^{-1} r with the Schur solve selected by spec.kind.
BlockField bsr_apply(const BlockField &r, const SaddleOperator &op, const SmootherSpec &spec);
void bsr_apply(const SaddleOperator &op, const SmootherSpec &spec, const BlockField &r,
               BlockField &out);

/// Dispatches on spec.kind.
void smoother_apply(const SaddleOperator &op, const SmootherSpec &spec, const BlockField &r,
                    BlockField &out);
BlockField smoother_apply(const BlockField &r, const SaddleOperator &op, const SmootherSpec &spec);

} // namespace ocmg

#endif // OCMG_SMOOTHERS_HPP
