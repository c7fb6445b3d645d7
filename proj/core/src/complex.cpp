#include "celltrees/complex.hpp"

#include <algorithm>
#include <set>

#include "celltrees/errors.hpp"

namespace celltrees {

CellComplex::CellComplex(std::vector<Cell> cells, std::string name,
                         std::map<std::string, std::string> metadata)
    : name_(std::move(name)), metadata_(std::move(metadata)) {
  int d = -1;
  for (const Cell& c : cells) {
    if (c.dim < 0) throw argument_error("cell '" + c.id + "' has negative dimension");
    d = std::max(d, c.dim);
  }
  by_dim_.resize(static_cast<std::size_t>(d + 1));
  for (Cell& c : cells) by_dim_[static_cast<std::size_t>(c.dim)].push_back(std::move(c));
  for (auto& level : by_dim_)
    std::sort(level.begin(), level.end(),
              [](const Cell& a, const Cell& b) { return a.id < b.id; });

  for (int k = 0; k <= d; ++k) {
    auto& level = by_dim_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Cell& c = level[i];
      if (!index_.emplace(c.id, std::make_pair(k, i)).second)
        throw argument_error("duplicate cell id '" + c.id + "'");
      for (const auto& [var, exp] : c.weight)
        if (exp < 0)
          throw argument_error("negative exponent for variable '" + var + "' on cell '" + c.id + "'");
    }
  }

  // Boundary references must resolve one dimension down; 0-cells carry only
  // the implicit augmentation.
  for (int k = 0; k <= d; ++k) {
    for (const Cell& c : by_dim_[static_cast<std::size_t>(k)]) {
      if (k == 0 && !c.boundary.empty())
        throw argument_error("0-cell '" + c.id + "' must not list an explicit boundary");
      std::set<std::string> seen;
      for (const auto& [target, coeff] : c.boundary) {
        (void)coeff;
        auto it = index_.find(target);
        if (it == index_.end())
          throw argument_error("cell '" + c.id + "' references unknown cell '" + target + "'");
        if (it->second.first != k - 1)
          throw argument_error("cell '" + c.id + "' references '" + target +
                               "' of dimension != dim-1");
        if (!seen.insert(target).second)
          throw argument_error("cell '" + c.id + "' lists '" + target + "' twice");
      }
    }
  }

  // d o d = 0, including the augmentation (d_0 d_1 = 0).
  for (int k = 1; k <= d; ++k) {
    IntegerMatrix prod = boundary_matrix(k - 1) * boundary_matrix(k);
    if (!prod.is_zero())
      throw argument_error("boundary of boundary is nonzero in dimension " + std::to_string(k));
  }
}

long CellComplex::f(int k) const {
  if (k == -1) return 1;
  if (k < -1 || k > dim()) return 0;
  return static_cast<long>(by_dim_[static_cast<std::size_t>(k)].size());
}

std::vector<long> CellComplex::f_vector() const {
  std::vector<long> out;
  for (int k = -1; k <= dim(); ++k) out.push_back(f(k));
  return out;
}

const std::vector<Cell>& CellComplex::cells(int k) const {
  static const std::vector<Cell> empty;
  if (k < 0 || k > dim()) return empty;
  return by_dim_[static_cast<std::size_t>(k)];
}

const Cell& CellComplex::cell(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw argument_error("unknown cell id '" + id + "'");
  return by_dim_[static_cast<std::size_t>(it->second.first)][it->second.second];
}

std::vector<const Cell*> CellComplex::all_cells() const {
  std::vector<const Cell*> out;
  for (const auto& level : by_dim_)
    for (const Cell& c : level) out.push_back(&c);
  return out;
}

std::vector<std::string> CellComplex::variables() const {
  std::set<std::string> vars;
  for (const auto& level : by_dim_)
    for (const Cell& c : level)
      for (const auto& [var, exp] : c.weight) {
        (void)exp;
        vars.insert(var);
      }
  return {vars.begin(), vars.end()};
}

IntegerMatrix CellComplex::boundary_matrix(int k) const {
  const std::size_t rows = static_cast<std::size_t>(std::max(f(k - 1), 0L));
  const std::size_t cols = static_cast<std::size_t>(std::max(f(k), 0L));
  IntegerMatrix m(rows, cols);
  if (k == 0) {
    for (std::size_t j = 0; j < cols; ++j) m(0, j) = 1;  // augmentation row
    return m;
  }
  if (k < 0 || k > dim()) return m;
  const auto& level = by_dim_[static_cast<std::size_t>(k)];
  for (std::size_t j = 0; j < level.size(); ++j)
    for (const auto& [target, coeff] : level[j].boundary) {
      const auto& loc = index_.at(target);
      m(loc.second, j) += coeff;
    }
  return m;
}

CellComplex CellComplex::skeleton(int k) const {
  if (k < -1 || k > dim())
    throw argument_error("skeleton dimension " + std::to_string(k) + " out of range");
  std::vector<Cell> kept;
  for (int j = 0; j <= k; ++j)
    for (const Cell& c : by_dim_[static_cast<std::size_t>(j)]) kept.push_back(c);
  return CellComplex(std::move(kept), name_ + "(" + std::to_string(k) + ")", metadata_);
}

CellComplex CellComplex::top_subcomplex(const std::vector<std::string>& top) const {
  const int d = dim();
  std::vector<Cell> kept;
  for (int j = 0; j < d; ++j)
    for (const Cell& c : by_dim_[static_cast<std::size_t>(j)]) kept.push_back(c);
  std::set<std::string> chosen;
  for (const std::string& id : top) {
    auto it = index_.find(id);
    if (it == index_.end() || it->second.first != d)
      throw argument_error("'" + id + "' is not a top-dimensional cell");
    if (chosen.insert(id).second)
      kept.push_back(by_dim_[static_cast<std::size_t>(d)][it->second.second]);
  }
  return CellComplex(std::move(kept), name_ + "_T", metadata_);
}

long reduced_betti(const CellComplex& cx, int k) {
  if (k < -1 || k > cx.dim()) return 0;
  long fk = cx.f(k);
  long r1 = static_cast<long>(rank(cx.boundary_matrix(k)));
  long r2 = static_cast<long>(rank(cx.boundary_matrix(k + 1)));
  return fk - r1 - r2;
}

std::optional<Int> homology_order(const CellComplex& cx, int k) {
  if (reduced_betti(cx, k) > 0) return std::nullopt;
  // ker d_k is a saturated sublattice of C_k, so the torsion of
  // coker d_{k+1} equals H~_k when the latter is finite.
  if (k < -1 || k >= cx.dim()) return Int(1);
  return smith_normal_form(cx.boundary_matrix(k + 1)).product();
}

bool is_apc(const CellComplex& cx) {
  for (int k = -1; k < cx.dim(); ++k)
    if (reduced_betti(cx, k) != 0) return false;
  return true;
}

}  // namespace celltrees
