#pragma once

#include <string>

#include "chctk/benchmark.hpp"

namespace chctk {

/// Deterministic serialization of a benchmark: one command per line, single
/// spaces between tokens, no comments, declarations in original order, and
/// quantified variables alpha-renamed per clause to v0, v1, ... in order of
/// first occurrence. Re-parsing the output yields a benchmark alpha-equal to
/// the input.
std::string printCanonical(const Benchmark& benchmark);

/// Renders one term with its current variable names (diagnostics, tests).
std::string printTerm(const Term::Ptr& term);

/// Renders a clause in assert-command form with its current variable names.
std::string printClause(const Clause& clause);

}  // namespace chctk
