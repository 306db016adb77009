#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "chctk/benchmark.hpp"
#include "chctk/track.hpp"

namespace chctk {

enum class Theory { Int, Real, Array };

struct CheckStats {
  std::size_t numClauses = 0;
  std::size_t numPredicates = 0;
  std::size_t numQueries = 0;
  std::set<std::string> usedSorts;
};

struct CheckReport {
  bool conformant = false;
  std::vector<Diagnostic> violations;
  Track track = Track::Unclassified;
  CheckStats stats;
};

/// Conformance against the competition fragment: exactly one query clause,
/// well-sorted clauses, theory usage within LIA / LRA / LIA+arrays, and
/// linear arithmetic. All failures are enumerated, none is fatal.
CheckReport checkFragment(const Benchmark& benchmark);

/// Track classification; meaningful on conformant benchmarks. Pure-Boolean
/// benchmarks classify with the LIA tracks by clause linearity.
Track classifyTrack(const Benchmark& benchmark);

/// Set of theories whose sorts or operators occur anywhere in the benchmark
/// (Bool excluded).
std::set<Theory> theoryOf(const Benchmark& benchmark);

}  // namespace chctk
