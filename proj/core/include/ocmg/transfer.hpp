#ifndef OCMG_TRANSFER_HPP
#define OCMG_TRANSFER_HPP

// Tensor-product intergrid transfers for coarsening by q.
//
// Restriction uses normalized 1D full-weighting weights
//   w_q(k) = (q - |k|) / q^2,  |k| < q
// (q=2: [1 2 1]/4, q=3: [1 2 3 2 1]/9, q=4: [1 2 3 4 3 2 1]/16).
// Prolongation is 1D linear interpolation with weights (q - |k|)/q between a
// fine node and the coarse node k fine steps away, zero boundary values.
// With these normalizations R = P^T / q^2 exactly.

#include "ocmg/grid.hpp"

namespace ocmg {

/// Coarse grid for coarsening by q; throws unless q divides N and N/q >= 2.
GridSpec coarsen(const GridSpec &fine, int q);

ScalarField restrict_field(const ScalarField &fine, int q);
ScalarField prolong_field(const ScalarField &coarse, int q);

BlockField restrict_field(const BlockField &fine, int q);
BlockField prolong_field(const BlockField &coarse, int q);

/// out += P coarse, without allocating the fine-level product twice.
void prolong_add(const BlockField &coarse, int q, BlockField &fine);

} // namespace ocmg

#endif // OCMG_TRANSFER_HPP
