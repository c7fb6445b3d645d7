#pragma once

#include <string>
#include <vector>

#include "celltrees/complex.hpp"

namespace celltrees {

/// Complete colorful complex parameters: color class sizes (n_1, ..., n_r),
/// optionally truncated to the k-skeleton.
struct ColorfulSpec {
  std::vector<int> sizes;
  int skeleton = -2;  // -2 means "full complex"
};

struct CubeSpec {
  int n = 0;
};

/// d-skeleton of the simplex on n vertices. Vertices carry variables v[i];
/// a face's monomial is the product of its vertex variables. Boundary signs
/// come from the sorted vertex order. Requires -1 <= d <= n-1.
CellComplex simplex_skeleton(int n, int d);

/// Complete colorful complex on color classes of the given sizes: faces take
/// at most one vertex per color. Vertex (q, i) carries variable X[q.i].
CellComplex complete_colorful(const ColorfulSpec& spec);

/// The edgeless (0-dimensional) complex forming color class q of size n_q.
CellComplex edgeless_complex(int q, int n_q);

/// Simplicial join. Both inputs must be simplicial complexes (each k-cell
/// has k+1 vertices with the standard facet boundary) with disjoint vertex
/// ids and disjoint weight variables; a join face's monomial is the product
/// of the two face monomials. Boundary signs come from the combined vertex
/// order (all of lhs's vertices before rhs's).
CellComplex join(const CellComplex& lhs, const CellComplex& rhs);

/// The n-cube as a regular cell complex with 3^n cells: words over
/// {0, 1, I}, dimension = number of I letters. An I at position i
/// contributes q[i] to the weight, a 0 contributes y[i], a 1 contributes
/// z[i]. The boundary replaces each I by 1 minus 0 with sign (-1)^(number
/// of earlier I coordinates).
CellComplex hypercube(const CubeSpec& spec);

}  // namespace celltrees
