#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: a union-find spanning-tree enumerator for graphs, a pencil-based
// characteristic polynomial (determinant evaluation + Lagrange interpolation)
// and direct minor-gcd ladders for Smith normal form checks.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "celltrees/complex.hpp"
#include "celltrees/matrix.hpp"
#include "celltrees/poly.hpp"

namespace celltrees::test {

void for_subsets(std::size_t n, std::size_t r,
                 const std::function<void(const std::vector<std::size_t>&)>& fn);

/// All spanning trees of a connected graph as sets of edge ids, found by
/// brute-force subset filtering with a union-find connectivity test.
std::set<std::set<std::string>> spanning_trees_union_find(const CellComplex& graph);

/// char poly of W^{-1} B via p(lambda) = det(lambda W - B) / det(W), the
/// determinant evaluated exactly at degree+1 rational points and interpolated.
UniPoly pencil_char_poly(const std::vector<Rat>& w_diagonal, const RationalMatrix& b);

/// gcd of all k x k minors (0 if all vanish); the invariant-factor ladder.
Int minor_gcd(const IntegerMatrix& m, std::size_t k);

/// The 6-vertex triangulation of the real projective plane.
CellComplex projective_plane_complex();

/// Deterministic small random matrices for property tests.
IntegerMatrix random_integer_matrix(std::size_t rows, std::size_t cols, std::uint64_t& state,
                                    int lo = -4, int hi = 4);
RationalMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::uint64_t& state);

}  // namespace celltrees::test
