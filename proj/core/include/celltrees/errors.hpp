#pragma once

#include <stdexcept>
#include <string>

namespace celltrees {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-square input where a square matrix is required, or shape mismatch.
class dimension_error : public error {
public:
  using error::error;
};

/// Bad argument: out-of-range dimension, unknown cell id, size mismatch.
class argument_error : public error {
public:
  using error::error;
};

/// A weight variable has no assigned value, or a non-positive value.
class specialization_error : public error {
public:
  using error::error;
};

/// Input outside the supported class (non-APC complex, infinite homology).
class unsupported_input_error : public error {
public:
  using error::error;
};

/// An internal cross-check failed; indicates a bug or corrupted input.
class invariant_violation : public error {
public:
  using error::error;
};

/// Malformed JSON document or weights file.
class format_error : public error {
public:
  using error::error;
};

}  // namespace celltrees
