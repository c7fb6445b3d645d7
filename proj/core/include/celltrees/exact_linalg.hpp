#pragma once

#include <cstddef>
#include <vector>

#include "celltrees/matrix.hpp"
#include "celltrees/poly.hpp"

namespace celltrees {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix (zeros
/// omitted, all positive, r = rank).
struct SnfResult {
  std::vector<Int> invariant_factors;

  Int product() const {
    Int p(1);
    for (const Int& d : invariant_factors) p *= d;
    return p;
  }
};

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Exact determinant via fraction-free elimination. Throws dimension_error
/// unless square.
Rat determinant(const RationalMatrix& m);
Int determinant(const IntegerMatrix& m);

SnfResult smith_normal_form(const IntegerMatrix& m);

/// Monic characteristic polynomial det(lambda*I - M), exact coefficients.
UniPoly char_poly(const RationalMatrix& m);

/// Product of nonzero eigenvalues: with char_poly = lambda^m (lambda^s +
/// c_{s-1} lambda^{s-1} + ... + c_0), c_0 != 0, returns (-1)^s c_0.
/// The 0x0 and all-zero matrices give 1 (empty product).
Rat pdet(const RationalMatrix& m);
Rat pdet_from_char_poly(const UniPoly& p);

}  // namespace celltrees
