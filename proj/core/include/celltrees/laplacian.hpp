#pragma once

#include "celltrees/complex.hpp"
#include "celltrees/weights.hpp"

namespace celltrees {

// The textbook weighted boundary maps conjugate by diagonal matrices whose
// entries are square roots of the cell weights. To stay inside exact rational
// arithmetic, every Laplacian here is returned in a form conjugated by that
// same diagonal matrix: entries are rational in the X values and the
// eigenvalue multiset is identical to the square-root form's.

/// W_k^{-1} d_{k+1} W_{k+1} d_{k+1}^T acting on k-chains. k ranges over
/// [-1, dim]; k = -1 is the 1x1 augmentation Laplacian [sum of vertex
/// weights], k = dim is the zero matrix.
RationalMatrix updown_laplacian(const CellComplex& cx, int k, const Specialization& spec);

/// d_k^T W_{k-1}^{-1} d_k W_k acting on k-chains, k in [-1, dim];
/// k = -1 gives the 0x0 matrix.
RationalMatrix downup_laplacian(const CellComplex& cx, int k, const Specialization& spec);

/// Sum of the two (both conjugated by the same diagonal, so the sum is
/// conjugate to the total Laplacian and the spectra agree).
RationalMatrix total_laplacian(const CellComplex& cx, int k, const Specialization& spec);

/// pi_k: the product of nonzero eigenvalues of the degree-(k-1) up-down
/// weighted Laplacian, 0 <= k <= dim. Computed both as
/// pdet(updown at k-1) and pdet(downup at k); throws invariant_violation
/// if the two disagree.
Rat pi_hat(const CellComplex& cx, int k, const Specialization& spec);

/// Nonzero spectra of the up-down Laplacian in degree k and the down-up
/// Laplacian in degree k+1 coincide. 0 <= k < dim.
bool verify_updown_downup_identity(const CellComplex& cx, int k, const Specialization& spec);

/// The total Laplacian's nonzero spectrum is the multiset union of the
/// up-down and down-up nonzero spectra. 0 <= k < dim.
bool verify_total_decomposition(const CellComplex& cx, int k, const Specialization& spec);

}  // namespace celltrees
