#include "celltrees/spectrum.hpp"

#include "celltrees/errors.hpp"

namespace celltrees {

void SpectrumDescriptor::add(const Rat& value, long multiplicity) {
  if (multiplicity < 0) throw argument_error("negative eigenvalue multiplicity");
  if (multiplicity == 0) return;
  entries_[value] += multiplicity;
}

long SpectrumDescriptor::total_multiplicity() const {
  long t = 0;
  for (const auto& [v, m] : entries_) t += m;
  return t;
}

long SpectrumDescriptor::multiplicity_of_zero() const {
  auto it = entries_.find(Rat(0));
  return it == entries_.end() ? 0 : it->second;
}

UniPoly SpectrumDescriptor::char_poly() const {
  UniPoly p = UniPoly::constant(Rat(1));
  for (const auto& [v, m] : entries_) {
    UniPoly factor({Rat(-v), Rat(1)});
    for (long i = 0; i < m; ++i) p = p * factor;
  }
  return p;
}

UniPoly SpectrumDescriptor::nonzero_char_poly() const {
  UniPoly p = UniPoly::constant(Rat(1));
  for (const auto& [v, m] : entries_) {
    if (v == 0) continue;
    UniPoly factor({Rat(-v), Rat(1)});
    for (long i = 0; i < m; ++i) p = p * factor;
  }
  return p;
}

Rat SpectrumDescriptor::pdet() const {
  Rat p(1);
  for (const auto& [v, m] : entries_) {
    if (v == 0) continue;
    p *= rat_pow(v, m);
  }
  return p;
}

SpectrumDescriptor SpectrumDescriptor::united(const SpectrumDescriptor& other) const {
  SpectrumDescriptor u = *this;
  for (const auto& [v, m] : other.entries_) u.add(v, m);
  return u;
}

}  // namespace celltrees
