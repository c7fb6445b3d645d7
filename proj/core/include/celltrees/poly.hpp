#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "celltrees/arith.hpp"
#include "celltrees/errors.hpp"

namespace celltrees {

/// Univariate polynomial in lambda with exact rational coefficients,
/// stored in ascending degree order with no trailing zero coefficients.
class UniPoly {
public:
  UniPoly() = default;  // the zero polynomial
  explicit UniPoly(std::vector<Rat> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
  }
  static UniPoly constant(const Rat& value) { return UniPoly({value}); }
  static UniPoly monomial(const Rat& coeff, std::size_t degree) {
    std::vector<Rat> c(degree + 1);
    c[degree] = coeff;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<Rat> p(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) p[i + j] += c_[i] * rhs.c_[j];
    }
    return UniPoly(std::move(p));
  }

  UniPoly operator+(const UniPoly& rhs) const {
    std::vector<Rat> p(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = coeff(i) + rhs.coeff(i);
    return UniPoly(std::move(p));
  }

  bool operator==(const UniPoly& rhs) const { return c_ == rhs.c_; }

  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return i;
    return 0;
  }

  /// Divides out the maximal power of lambda. Spectrum statements "up to the
  /// multiplicity of 0" compare these stripped polynomials.
  UniPoly strip_lambda() const {
    if (is_zero()) return UniPoly();
    std::size_t m = low_degree();
    return UniPoly(std::vector<Rat>(c_.begin() + static_cast<long>(m), c_.end()));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      const Rat& a = c_[i];
      if (first) {
        if (a < 0) out += '-';
        first = false;
      } else {
        out += (a < 0) ? " - " : " + ";
      }
      Rat mag = a < 0 ? Rat(-a) : a;
      if (mag != 1 || i == 0) out += rat_to_string(mag);
      if (i > 0) {
        if (mag != 1) out += '*';
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out;
  }

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace celltrees
