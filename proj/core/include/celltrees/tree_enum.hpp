#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "celltrees/complex.hpp"
#include "celltrees/weights.hpp"

namespace celltrees {

/// One spanning tree in dimension k: the chosen k-cells and the order of the
/// codimension-1 homology group of the spanned subcomplex.
struct TreeRecord {
  std::vector<std::string> cells;  // sorted k-cell ids
  Int torsion_order = 1;           // h = |H~_{k-1}|, always >= 1
};

struct TreeCountReport {
  int k = 0;
  Int tau = 0;                     // sum of h^2
  std::uint64_t tree_count = 0;    // number of trees (not torsion-weighted)
  Int max_torsion = 0;             // 0 when there are no trees
  std::optional<Rat> tau_hat;      // present when a specialization was given
};

struct EnumOptions {
  /// Re-derive every 50th tree's torsion order from the homology of the
  /// spanned subcomplex and throw invariant_violation on mismatch.
  bool cross_check = false;
};

/// Streams the k-trees in lexicographic order of their sorted cell-id sets.
/// A subset T of k-cells with |T| = rank d_k and independent columns spans,
/// has the forced cell count and is acyclic, hence is a tree; its torsion
/// order is the product of the invariant factors of d_k restricted to T
/// (valid because ker d_{k-1} is a saturated sublattice).
///
/// Requires the k-skeleton to be acyclic in positive codimension; throws
/// unsupported_input_error otherwise. k = -1 yields the single empty tree.
void enumerate_trees(const CellComplex& cx, int k,
                     const std::function<void(const TreeRecord&)>& emit,
                     const EnumOptions& options = {});

std::vector<TreeRecord> collect_trees(const CellComplex& cx, int k,
                                      const EnumOptions& options = {});

/// tau_k = sum of h^2 over k-trees. Enumeration may be split across
/// `threads` workers; the exact sum is order-independent.
Int tau(const CellComplex& cx, int k, unsigned threads = 1);

/// tau-hat_k = sum of h^2 * prod_{cell in T} X_cell.
Rat tau_hat(const CellComplex& cx, int k, const Specialization& spec, unsigned threads = 1);

/// One enumeration pass computing tau, the tree count, the largest torsion
/// order and (when `spec` is nonnull) tau-hat.
TreeCountReport tree_count_report(const CellComplex& cx, int k, const Specialization* spec,
                                  unsigned threads = 1);

/// Evaluates tau-hat from a previously collected tree list.
Rat tau_hat_of_records(const CellComplex& cx, int k, const std::vector<TreeRecord>& records,
                       const Specialization& spec);

/// The weighted cellular matrix-tree identity in degree k:
///   pi_k * |H~_{k-2}|^2 * X_(k-1)  ==  tau-hat_k * tau-hat_{k-1},
/// checked as exact rationals. Requires an APC complex and 0 <= k <= dim.
bool verify_cmtt(const CellComplex& cx, int k, const Specialization& spec);

/// For a connected graph: (prod_v X_v / sum_v X_v) * pdet of the weighted
/// degree-0 up-down Laplacian; equals tau-hat_1.
Rat graph_tau_hat(const CellComplex& cx, const Specialization& spec);

/// The squared weighted submatrix determinant identity for top-dimensional
/// square submatrices: with |S| = |T| = f_d - beta_d, the minor on (S, T) is
/// nonsingular exactly when T spans a d-tree and the complement of S spans a
/// (d-1)-tree, and in that case
///   (det dd_{S,T})^2 * X_T / X_S ==
///   (h(T) * h(complement of S) / h(complex))^2 * X_T / X_S.
bool verify_submatrix_determinant(const CellComplex& cx, const std::vector<std::string>& s_cells,
                                  const std::vector<std::string>& t_cells,
                                  const Specialization& spec);

}  // namespace celltrees
