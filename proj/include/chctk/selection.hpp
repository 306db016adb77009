#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chctk/diagnostic.hpp"
#include "chctk/rating.hpp"

namespace chctk {

/// Benchmark ids of one repository, bucketed by rating.
struct RatedPools {
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::vector<std::string> c;
};

struct CascadeCounts {
  std::size_t takeA = 0;
  std::size_t takeB = 0;
  std::size_t takeC = 0;
  std::size_t total() const { return takeA + takeB + takeC; }
};

/// Quota cascade: each rating's target is the per-repository quota plus the
/// shortfall carried over from the easier ratings (A to B to C); each take is
/// capped by the pool size. Total taken never exceeds three times the quota.
CascadeCounts cascadeQuota(std::size_t poolA, std::size_t poolB,
                           std::size_t poolC, std::size_t quota);

struct PoolSelection {
  std::vector<std::string> takenA;
  std::vector<std::string> takenB;
  std::vector<std::string> takenC;
};

/// Applies the quota cascade to one repository, picking members uniformly at
/// random without replacement. Each rating pool draws from its own substream
/// derived from (rootSeed, repository, rating), and pools are sorted before
/// shuffling, so the outcome does not depend on input order.
PoolSelection selectFromRepository(const RatedPools& pools, std::size_t quota,
                                   std::uint64_t rootSeed,
                                   std::string_view repository);

struct SelectionPolicy {
  std::map<std::string, std::size_t> perRepoQuota;  // repository -> N_r
  std::uint64_t seed = 0;
};

struct SelectionResult {
  struct Counts {
    std::size_t takenA = 0;
    std::size_t takenB = 0;
    std::size_t takenC = 0;
    std::size_t total() const { return takenA + takenB + takenC; }
  };
  std::map<std::string, std::vector<std::string>> chosen;
  std::map<std::string, Counts> counts;

  std::size_t totalChosen() const;
};

/// Per-repository selection over the whole track; deterministic for a fixed
/// seed. Throws Error when a repository has no quota in the policy.
SelectionResult selectAll(const std::map<std::string, RatedPools>& rated,
                          const SelectionPolicy& policy);

/// Identity selection, used for tracks small enough to run in full.
std::vector<std::string> selectWholeTrack(std::vector<std::string> benchmarks);

}  // namespace chctk
