#include "celltrees/weights.hpp"

#include <algorithm>

#include "celltrees/errors.hpp"

namespace celltrees {

Specialization::Specialization(std::map<std::string, Rat> values) : values_(std::move(values)) {
  for (const auto& [var, val] : values_)
    if (val <= 0)
      throw specialization_error("variable '" + var + "' must be assigned a positive value");
}

Specialization Specialization::all_ones(const std::vector<std::string>& variables) {
  std::map<std::string, Rat> v;
  for (const auto& var : variables) v.emplace(var, Rat(1));
  return Specialization(std::move(v));
}

const Rat& Specialization::value(const std::string& variable) const {
  auto it = values_.find(variable);
  if (it == values_.end())
    throw specialization_error("variable '" + variable + "' has no assigned value");
  return it->second;
}

Specialization Specialization::scaled(const Rat& c) const {
  std::map<std::string, Rat> v = values_;
  for (auto& [var, val] : v) val *= c;
  return Specialization(std::move(v));
}

Specialization Specialization::scaled(const Rat& c, const std::vector<std::string>& variables) const {
  std::map<std::string, Rat> v = values_;
  for (const auto& var : variables) {
    auto it = v.find(var);
    if (it == v.end()) throw specialization_error("variable '" + var + "' has no assigned value");
    it->second *= c;
  }
  return Specialization(std::move(v));
}

Rat weight_of_monomial(const Monomial& monomial, const Specialization& spec) {
  Rat w(1);
  for (const auto& [var, exp] : monomial) w *= rat_pow(spec.value(var), exp);
  return w;
}

Rat weight_of_cell(const Cell& cell, const Specialization& spec) {
  return weight_of_monomial(cell.weight, spec);
}

Rat weight_product(const CellComplex& cx, int k, const Specialization& spec) {
  Rat p(1);
  for (const Cell& c : cx.cells(k)) p *= weight_of_cell(c, spec);
  return p;
}

Specialization random_specialization(const std::vector<std::string>& variables,
                                     std::uint64_t seed, std::uint64_t point_index) {
  std::uint64_t state = seed ^ (0xa0761d6478bd642fULL * (point_index + 1));
  std::vector<std::string> sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::string, Rat> v;
  for (const auto& var : sorted) {
    Int num = 1 + static_cast<long>(detail::splitmix64(state) % 16);
    Int den = 1 + static_cast<long>(detail::splitmix64(state) % 16);
    v.emplace(var, Rat(num, den));
  }
  return Specialization(std::move(v));
}

}  // namespace celltrees
