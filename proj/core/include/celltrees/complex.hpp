#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "celltrees/exact_linalg.hpp"
#include "celltrees/matrix.hpp"

namespace celltrees {

/// Weight monomial: variable name -> nonnegative exponent.
using Monomial = std::map<std::string, int>;

/// A single cell. The empty cell in dimension -1 is implicit and never
/// stored; every 0-cell has implicit boundary coefficient +1 on it.
struct Cell {
  std::string id;
  int dim = 0;
  Monomial weight;
  /// Signed incidences on cells of dimension dim-1 (empty for 0-cells).
  std::vector<std::pair<std::string, Int>> boundary;
};

/// A finite cell complex with graded cells and integer boundary incidences.
/// Immutable after construction; construction validates unique ids, resolvable
/// boundary references (dimension exactly one lower) and d(d(x)) = 0,
/// including the augmentation row in dimension 0.
///
/// Within each dimension, cells are kept in lexicographic id order; all
/// matrices produced here index rows and columns in that order.
class CellComplex {
public:
  CellComplex() = default;  // the empty complex (only the implicit empty cell)
  explicit CellComplex(std::vector<Cell> cells, std::string name = "",
                       std::map<std::string, std::string> metadata = {});

  /// -1 for the empty complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::string& name() const { return name_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// f_k; f_{-1} = 1, zero outside [-1, dim].
  long f(int k) const;
  /// (f_{-1} = 1, f_0, ..., f_d).
  std::vector<long> f_vector() const;

  /// Cells of dimension k in id order (empty outside [0, dim]).
  const std::vector<Cell>& cells(int k) const;
  const Cell& cell(const std::string& id) const;
  bool has_cell(const std::string& id) const { return index_.count(id) != 0; }

  /// All cells, dimension by dimension.
  std::vector<const Cell*> all_cells() const;

  /// Sorted union of the variable names appearing in weight monomials.
  std::vector<std::string> variables() const;

  /// The boundary map C_k -> C_{k-1} as a matrix with rows indexed by
  /// cells of dimension k-1 and columns by cells of dimension k, both in id
  /// order. k = 0 gives the 1 x f_0 all-ones augmentation row; out-of-range
  /// k gives matrices with zero rows and/or columns as appropriate.
  IntegerMatrix boundary_matrix(int k) const;

  /// Subcomplex of all cells of dimension <= k. Throws argument_error
  /// unless -1 <= k <= dim.
  CellComplex skeleton(int k) const;

  /// The complex whose top cells are exactly `top` (ids of dim()-cells) and
  /// whose lower skeleton is unchanged.
  CellComplex top_subcomplex(const std::vector<std::string>& top) const;

private:
  std::string name_;
  std::map<std::string, std::string> metadata_;
  std::vector<std::vector<Cell>> by_dim_;               // index = dimension
  std::map<std::string, std::pair<int, std::size_t>> index_;  // id -> (dim, pos)
};

/// Rational reduced Betti number via beta_k = f_k - rank d_k - rank d_{k+1}.
long reduced_betti(const CellComplex& cx, int k);

/// |H~_k| when finite (the product of the invariant factors of d_{k+1}),
/// std::nullopt when the group is infinite (beta_k > 0).
std::optional<Int> homology_order(const CellComplex& cx, int k);

/// Acyclic in positive codimension: beta_k = 0 for all k < dim.
bool is_apc(const CellComplex& cx);

}  // namespace celltrees
