#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chromo/verify.hpp"

namespace chromo {

struct SweepOptions {
  std::uint64_t prime = 7;
  /// Exhaustive mode visits all p^6 ordered coordinate triples.
  bool exhaustive = true;
  /// Random mode: number of uniformly drawn ordered triples.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::vector<CheckGroup> groups = all_check_groups();
  unsigned jobs = 1;
  /// Stop recording counterexamples after this many.
  std::size_t max_counterexamples = 20;
};

struct CheckCounts {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct Counterexample {
  std::uint64_t index;  // position in the enumeration
  std::array<std::array<std::uint64_t, 2>, 3> points;
  std::string check;
};

struct SweepSummary {
  std::uint64_t modulus = 0;
  std::string mode;         // "exhaustive" or "random:<n>"
  std::string enumeration;  // human-readable description of the triple space
  std::uint64_t total = 0;
  std::uint64_t triangles_checked = 0;
  std::uint64_t collinear_skipped = 0;
  std::uint64_t euler_degenerate = 0;  // (triangle, colour) pairs with O = C
  std::uint64_t omega_degenerate = 0;
  /// Triangles on which some check threw; each is also a counterexample.
  std::uint64_t unexpected_errors = 0;
  std::vector<std::string> check_names;  // selected checks, catalog order
  std::vector<CheckCounts> counts;       // parallel to check_names
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0;

  std::uint64_t total_failures() const;
};

/// Runs the selected checks over the triple space. The result (apart from
/// elapsed_seconds) does not depend on `jobs`: the space is cut into fixed
/// chunks, each chunk is processed independently and the partial results
/// are merged in chunk order. Throws InvalidField on a bad modulus.
SweepSummary run_sweep(const SweepOptions& options);

}  // namespace chromo
