#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "celltrees/arith.hpp"
#include "celltrees/complex.hpp"

namespace celltrees {

/// Assignment of a positive rational value to each weight variable. Zero or
/// negative values are rejected at construction: positive weights keep every
/// weighted Laplacian well defined and every tree monomial positive.
class Specialization {
public:
  Specialization() = default;
  explicit Specialization(std::map<std::string, Rat> values);

  static Specialization all_ones(const std::vector<std::string>& variables);

  const Rat& value(const std::string& variable) const;
  bool has(const std::string& variable) const { return values_.count(variable) != 0; }
  const std::map<std::string, Rat>& values() const { return values_; }

  /// Pointwise scaling by c > 0 (used by the covariance tests).
  Specialization scaled(const Rat& c) const;
  /// Scales only the listed variables by c.
  Specialization scaled(const Rat& c, const std::vector<std::string>& variables) const;

private:
  std::map<std::string, Rat> values_;
};

/// Value of a weight monomial under a specialization; the empty monomial
/// gives 1. Throws specialization_error on an unassigned variable.
Rat weight_of_monomial(const Monomial& monomial, const Specialization& spec);

/// X_sigma for a cell.
Rat weight_of_cell(const Cell& cell, const Specialization& spec);

/// Product of the weights of all k-cells; 1 when there are none. The
/// implicit empty cell has weight 1, so k = -1 also gives 1.
Rat weight_product(const CellComplex& cx, int k, const Specialization& spec);

/// Deterministic pseudo-random positive rationals (numerators and
/// denominators in [1, 16]) for a (seed, point index) pair, independent of
/// platform and of any global state. Variables are assigned in sorted order.
Specialization random_specialization(const std::vector<std::string>& variables,
                                     std::uint64_t seed, std::uint64_t point_index);

namespace detail {
/// splitmix64; the portable generator behind all seeded choices here.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

}  // namespace celltrees
