#include "chctk/selection.hpp"

#include <algorithm>

#include "chctk/rng.hpp"

namespace chctk {

CascadeCounts cascadeQuota(std::size_t poolA, std::size_t poolB,
                           std::size_t poolC, std::size_t quota) {
  CascadeCounts counts;
  std::size_t target = quota;
  counts.takeA = std::min(target, poolA);
  std::size_t carry = target - counts.takeA;
  target = quota + carry;
  counts.takeB = std::min(target, poolB);
  carry = target - counts.takeB;
  target = quota + carry;
  counts.takeC = std::min(target, poolC);
  return counts;
}

namespace {

std::vector<std::string> pickFromPool(std::vector<std::string> pool,
                                      std::size_t take, std::uint64_t rootSeed,
                                      std::string_view repository,
                                      char rating) {
  std::sort(pool.begin(), pool.end());
  SelectionRng rng(deriveSubstreamSeed(rootSeed, repository, rating));
  partialShuffle(pool, take, rng);
  pool.resize(std::min(take, pool.size()));
  return pool;
}

}  // namespace

PoolSelection selectFromRepository(const RatedPools& pools, std::size_t quota,
                                   std::uint64_t rootSeed,
                                   std::string_view repository) {
  const CascadeCounts counts =
      cascadeQuota(pools.a.size(), pools.b.size(), pools.c.size(), quota);
  PoolSelection sel;
  sel.takenA = pickFromPool(pools.a, counts.takeA, rootSeed, repository, 'A');
  sel.takenB = pickFromPool(pools.b, counts.takeB, rootSeed, repository, 'B');
  sel.takenC = pickFromPool(pools.c, counts.takeC, rootSeed, repository, 'C');
  return sel;
}

std::size_t SelectionResult::totalChosen() const {
  std::size_t total = 0;
  for (const auto& [repo, ids] : chosen) total += ids.size();
  return total;
}

SelectionResult selectAll(const std::map<std::string, RatedPools>& rated,
                          const SelectionPolicy& policy) {
  SelectionResult result;
  for (const auto& [repo, pools] : rated) {
    auto quota = policy.perRepoQuota.find(repo);
    if (quota == policy.perRepoQuota.end())
      throw Error("no quota configured for repository '" + repo + "'");
    PoolSelection sel =
        selectFromRepository(pools, quota->second, policy.seed, repo);
    SelectionResult::Counts counts;
    counts.takenA = sel.takenA.size();
    counts.takenB = sel.takenB.size();
    counts.takenC = sel.takenC.size();
    std::vector<std::string> ids;
    ids.reserve(counts.total());
    for (auto* taken : {&sel.takenA, &sel.takenB, &sel.takenC})
      for (auto& id : *taken) ids.push_back(std::move(id));
    result.chosen.emplace(repo, std::move(ids));
    result.counts.emplace(repo, counts);
  }
  return result;
}

std::vector<std::string> selectWholeTrack(std::vector<std::string> benchmarks) {
  return benchmarks;
}

}  // namespace chctk
