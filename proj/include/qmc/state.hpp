#pragma once

#include "qmc/types.hpp"

namespace qmc {

/// Kronecker product of two states; entry (i*b.dim + j) = a_i * b_j.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Rank-1 projector |v><v|.
DensityMatrix outer_product(const StateVector& v);

/// Reduced state on the Y subsystem: out(a,b) = sum_i rho((i,a),(i,b)).
/// Throws DimensionError if rho.dim != shape.joint_dim().
DensityMatrix partial_trace_out_x(const DensityMatrix& rho,
                                  const BipartiteShape& shape);

/// P rho P / Tr[P rho P]. Throws ZeroSupportError when the projected trace
/// is below kSupportEps relative to trace(rho). If support_out is non-null
/// it receives Tr[P rho P] before normalization.
DensityMatrix project_and_renormalize(const DensityMatrix& rho,
                                      const CMatrix& projector,
                                      double* support_out = nullptr);

/// Hermiticity / trace / positivity report (eigenvalue check included;
/// this is the one place the full spectrum is computed).
ValidityReport validate_density(const DensityMatrix& rho);

/// Dense product C = A * B.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Tr[rho^2]; equals 1 exactly for pure states.
double purity(const DensityMatrix& rho);

}  // namespace qmc
