#pragma once

#include <optional>
#include <string>

#include "chctk/diagnostic.hpp"

namespace chctk {

/// Difficulty rating from the two probe solvers: A easiest, C hardest.
enum class Rating { A, B, C };

char ratingLetter(Rating r);
std::optional<Rating> ratingFromLetter(char c);

/// Outcome of one probe solver on one benchmark.
struct ProbeOutcome {
  std::string benchmarkId;
  std::string solverName;
  bool solved = false;
};

/// A if both probes solved the benchmark, B if exactly one did, C if neither.
/// Throws Error when the two outcomes refer to different benchmarks.
Rating rate(const ProbeOutcome& probe1, const ProbeOutcome& probe2);

}  // namespace chctk
