#include "celltrees/exact_linalg.hpp"

#include <algorithm>

namespace celltrees {

namespace {

// Fraction-free (Bareiss) elimination; returns the echelon pivot count and,
// for square input, the determinant.
struct BareissResult {
  std::size_t rank = 0;
  Int det = 0;
  bool det_valid = false;
};

BareissResult bareiss(IntegerMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  BareissResult res;
  Int prev(1);
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      m.swap_rows(piv, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  res.rank = r;
  if (rows == cols) {
    res.det_valid = true;
    res.det = (r == rows) ? Int(sign) * prev : Int(0);
  }
  return res;
}

}  // namespace

std::size_t rank(const IntegerMatrix& m) { return bareiss(m).rank; }

std::size_t rank(const RationalMatrix& m) {
  // Row scaling by denominator lcms preserves rank.
  IntegerMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, rat_den(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = rat_num(m(i, j)) * (l / rat_den(m(i, j)));
  }
  return rank(z);
}

Int determinant(const IntegerMatrix& m) {
  if (!m.square()) throw dimension_error("determinant of non-square matrix");
  if (m.rows() == 0) return Int(1);
  return bareiss(m).det;
}

Rat determinant(const RationalMatrix& m) {
  if (!m.square()) throw dimension_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  // Clear denominators row by row, tracking the scale factor.
  IntegerMatrix z(n, n);
  Rat scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, rat_den(m(i, j)));
    scale *= Rat(1, l);
    for (std::size_t j = 0; j < n; ++j) z(i, j) = rat_num(m(i, j)) * (l / rat_den(m(i, j)));
  }
  return scale * Rat(bareiss(z).det);
}

SnfResult smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t bound = std::min(rows, cols);
  std::vector<Int> diag;

  const auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };

  for (std::size_t t = 0; t < bound; ++t) {
    // Locate the smallest nonzero entry of the trailing submatrix; keeping
    // pivots small limits coefficient blowup.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best(0);
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        Int a = abs_of(m(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q = m(i, t) / m(t, t);
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) {
          // Remainder is smaller than the pivot; promote it.
          m.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q = m(t, j) / m(t, t);
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          m.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Pivot now lone in its row and column; enforce divisibility of the
      // trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
            divides = false;
          }
      if (divides) break;
    }
    diag.push_back(abs_of(m(t, t)));
  }

  SnfResult res;
  res.invariant_factors = std::move(diag);
  return res;
}

UniPoly char_poly(const RationalMatrix& m) {
  if (!m.square()) throw dimension_error("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rat> c(n + 1);
  c[n] = Rat(1);
  if (n == 0) return UniPoly(std::move(c));
  // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  RationalMatrix acc(n, n);  // starts at zero
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    acc = m * acc;
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += acc(i, i);
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

Rat pdet_from_char_poly(const UniPoly& p) {
  if (p.is_zero()) throw invariant_violation("pdet of the zero polynomial");
  std::size_t m = p.low_degree();
  std::size_t s = static_cast<std::size_t>(p.degree()) - m;
  Rat c0 = p.coeff(m);
  return (s % 2 == 0) ? c0 : Rat(-c0);
}

Rat pdet(const RationalMatrix& m) {
  if (!m.square()) throw dimension_error("pdet of non-square matrix");
  return pdet_from_char_poly(char_poly(m));
}

}  // namespace celltrees
