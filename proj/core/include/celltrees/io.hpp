#pragma once

#include <string>

#include "celltrees/complex.hpp"
#include "celltrees/weights.hpp"

namespace celltrees {

// Complex documents are JSON objects
//   {"cells": [...], "metadata": {...}, "name": "..."}
// with cells sorted by (dim, id) and each cell rendered as
//   {"boundary": [["id", coeff], ...], "dim": k, "id": "...", "weight": {...}}.
// Serialization is canonical: sorted keys, no insignificant whitespace,
// rationals as "p/q" strings in lowest terms, integer coefficients unquoted
// while they fit in 64 bits (decimal strings beyond that). The implicit
// empty cell is never serialized; loading re-validates d(d(x)) = 0.

std::string complex_to_json(const CellComplex& cx);
CellComplex complex_from_json(const std::string& json_text);

void save_complex(const CellComplex& cx, const std::string& path);
CellComplex load_complex(const std::string& path);

// Weights files are {"variables": {"name": "p/q", ...}}; every value must be
// a positive rational.
std::string weights_to_json(const Specialization& spec);
Specialization weights_from_json(const std::string& json_text);
Specialization load_weights(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace celltrees
