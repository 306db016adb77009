#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chctk/benchmark.hpp"

namespace chctk {

/// Rewrites a multi-query benchmark to single-query form: a fresh nullary
/// predicate is declared, every query head becomes that predicate, and one
/// final clause "aux => false" is appended. A single-query benchmark is
/// returned unchanged (so the operation is idempotent). Throws Error when
/// the benchmark has no query.
Benchmark mergeQueries(const Benchmark& benchmark);

/// One output benchmark per query clause, each keeping all non-query clauses
/// plus exactly that query, in query order. Throws Error when the benchmark
/// has no query.
std::vector<Benchmark> splitQueries(const Benchmark& benchmark);

/// SHA-256 of the canonical serialization; stable across processes and
/// platforms, and insensitive to formatting, comments, and bound-variable
/// names of the source text.
Digest checksum(const Benchmark& benchmark);

struct DedupResult {
  std::vector<Benchmark> unique;  // first occurrence per digest, input order
  std::vector<std::pair<std::string, std::string>>
      dropped;  // (duplicate origin, kept origin)
};

/// Keeps the first benchmark per canonical digest. Checksums are filled in
/// on the kept copies.
DedupResult dedup(const std::vector<Benchmark>& benchmarks);

/// Base name used for the auxiliary merged-query predicate; "_1", "_2", ...
/// suffixes are appended on collision.
inline constexpr const char* kMergedQueryPredicate = "CHC_COMP_MERGED_QUERY";

}  // namespace chctk
