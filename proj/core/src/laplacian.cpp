#include "celltrees/laplacian.hpp"

#include "celltrees/errors.hpp"

namespace celltrees {

namespace {

void check_range(const CellComplex& cx, int k, int lo) {
  if (k < lo || k > cx.dim())
    throw argument_error("dimension " + std::to_string(k) + " out of range for this complex");
}

// Weights of the cells of dimension k in matrix order; dimension -1 holds the
// implicit empty cell of weight 1.
std::vector<Rat> level_weights(const CellComplex& cx, int k, const Specialization& spec) {
  if (k == -1) return {Rat(1)};
  std::vector<Rat> w;
  for (const Cell& c : cx.cells(k)) w.push_back(weight_of_cell(c, spec));
  return w;
}

}  // namespace

RationalMatrix updown_laplacian(const CellComplex& cx, int k, const Specialization& spec) {
  check_range(cx, k, -1);
  IntegerMatrix bd = cx.boundary_matrix(k + 1);
  std::vector<Rat> wk = level_weights(cx, k, spec);
  std::vector<Rat> wk1 = level_weights(cx, k + 1, spec);
  const std::size_t n = bd.rows(), m = bd.cols();
  RationalMatrix L(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc(0);
      for (std::size_t c = 0; c < m; ++c) {
        if (bd(i, c) == 0 || bd(j, c) == 0) continue;
        acc += Rat(bd(i, c) * bd(j, c)) * wk1[c];
      }
      L(i, j) = acc / wk[i];
    }
  return L;
}

RationalMatrix downup_laplacian(const CellComplex& cx, int k, const Specialization& spec) {
  check_range(cx, k, -1);
  if (k == -1) return RationalMatrix(0, 0);
  IntegerMatrix bd = cx.boundary_matrix(k);
  std::vector<Rat> wk = level_weights(cx, k, spec);
  std::vector<Rat> wkm1 = level_weights(cx, k - 1, spec);
  const std::size_t n = bd.cols(), rows = bd.rows();
  RationalMatrix L(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc(0);
      for (std::size_t r = 0; r < rows; ++r) {
        if (bd(r, i) == 0 || bd(r, j) == 0) continue;
        acc += Rat(bd(r, i) * bd(r, j)) / wkm1[r];
      }
      L(i, j) = acc * wk[j];
    }
  return L;
}

RationalMatrix total_laplacian(const CellComplex& cx, int k, const Specialization& spec) {
  check_range(cx, k, -1);
  RationalMatrix up = updown_laplacian(cx, k, spec);
  if (k == -1) return up;  // no down part below the empty cell
  return up + downup_laplacian(cx, k, spec);
}

Rat pi_hat(const CellComplex& cx, int k, const Specialization& spec) {
  check_range(cx, k, 0);
  Rat via_up = pdet(updown_laplacian(cx, k - 1, spec));
  Rat via_down = pdet(downup_laplacian(cx, k, spec));
  if (via_up != via_down)
    throw invariant_violation("pdet mismatch between up-down (k-1) and down-up (k) Laplacians at k=" +
                              std::to_string(k));
  return via_up;
}

bool verify_updown_downup_identity(const CellComplex& cx, int k, const Specialization& spec) {
  if (k < 0 || k >= cx.dim())
    throw argument_error("identity check needs 0 <= k < dim");
  UniPoly up = char_poly(updown_laplacian(cx, k, spec)).strip_lambda();
  UniPoly down = char_poly(downup_laplacian(cx, k + 1, spec)).strip_lambda();
  return up == down;
}

bool verify_total_decomposition(const CellComplex& cx, int k, const Specialization& spec) {
  if (k < 0 || k >= cx.dim())
    throw argument_error("decomposition check needs 0 <= k < dim");
  UniPoly tot = char_poly(total_laplacian(cx, k, spec)).strip_lambda();
  UniPoly up = char_poly(updown_laplacian(cx, k, spec)).strip_lambda();
  UniPoly down = char_poly(downup_laplacian(cx, k, spec)).strip_lambda();
  return tot == up * down;
}

}  // namespace celltrees
