#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "celltrees/weights.hpp"

namespace celltrees {

struct CheckOutcome {
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// One verification check with a stable sort key. `run` is pure, so checks
/// may execute on any thread; reports list them in key order regardless.
struct Check {
  std::string name;
  std::string complex_name;
  std::optional<int> k;
  std::optional<long> point;  // -1 encodes the all-ones specialization
  std::function<CheckOutcome()> run;
};

struct CheckRecord {
  std::string name;
  std::string complex_name;
  std::optional<int> k;
  std::optional<long> point;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  long points = 0;
  std::vector<CheckRecord> checks;
  long passed = 0;
  long failed = 0;
  long long wall_ms = 0;
};

/// Suites: "all", "cmtt", "colorful", "cube", "spectra", "identities".
std::vector<Check> build_suite(const std::string& suite, std::uint64_t seed, long points);

VerificationReport run_suite(const std::string& suite, std::uint64_t seed, long points,
                             unsigned threads = 1);

/// Canonical JSON: a deterministic "results" section (the comparison
/// section for reproducibility) and a separate "timing" section.
std::string report_to_json(const VerificationReport& report);

/// The specialization battery used by all suites: point -1 is all-ones,
/// points 0..N-1 are seeded pseudo-random positive rationals.
Specialization battery_point(const CellComplex& cx, std::uint64_t seed, long point);

}  // namespace celltrees
