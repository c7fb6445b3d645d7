#pragma once

#include <map>

#include "celltrees/arith.hpp"
#include "celltrees/poly.hpp"

namespace celltrees {

/// A multiset of (rational eigenvalue, multiplicity) pairs. Adding an
/// eigenvalue twice merges multiplicities, so closed-form spectra whose
/// entries collide at a specialization compare correctly.
class SpectrumDescriptor {
public:
  SpectrumDescriptor() = default;

  void add(const Rat& value, long multiplicity);

  const std::map<Rat, long>& entries() const { return entries_; }
  long total_multiplicity() const;
  long multiplicity_of_zero() const;

  /// prod (lambda - v)^m over all entries, zeros included.
  UniPoly char_poly() const;
  /// Same with the zero eigenvalue dropped (the "circ-eq" comparison side).
  UniPoly nonzero_char_poly() const;
  /// Product of the nonzero eigenvalues with multiplicity; 1 if none.
  Rat pdet() const;

  /// Multiset union (adds multiplicities).
  SpectrumDescriptor united(const SpectrumDescriptor& other) const;

  bool operator==(const SpectrumDescriptor& other) const { return entries_ == other.entries_; }

private:
  std::map<Rat, long> entries_;
};

}  // namespace celltrees
