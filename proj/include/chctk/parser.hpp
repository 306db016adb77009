#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chctk/benchmark.hpp"
#include "chctk/diagnostic.hpp"

namespace chctk {

struct ParseResult {
  /// Engaged iff no error diagnostics were produced.
  std::optional<Benchmark> benchmark;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return benchmark.has_value(); }
};

/// Parses a CHC script in the competition's SMT-LIB fragment. Accepted shape:
/// optional (set-logic HORN), declare-fun commands with Bool result sort,
/// assert commands each holding a closed forall over an implication (or a
/// ground implication/atom), then (check-sat). Clause bodies are partitioned
/// into uninterpreted predicate atoms and a single interpreted constraint.
/// Never throws on malformed input; all failures are reported as located
/// diagnostics.
ParseResult parseBenchmark(std::string_view source, std::string origin);

/// True iff the symbol belongs to the fixed theory signature (including
/// true/false). Predicates may not shadow these.
bool isTheorySymbol(std::string_view name);

}  // namespace chctk
