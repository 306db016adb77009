#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chctk/diagnostic.hpp"
#include "chctk/rational.hpp"

namespace chctk {

/// Outcome of one solver run. Unknown subsumes give-up, timeout, memory-out,
/// and crash.
enum class RunResult { Sat, Unsat, Unknown };

std::string_view runResultName(RunResult result);
std::optional<RunResult> runResultFromName(std::string_view name);

struct RunRecord {
  std::string solver;
  std::string config;
  std::string benchmarkId;
  RunResult result = RunResult::Unknown;
  BigRat cpuSeconds = 0;
  BigRat wallSeconds = 0;

  bool solved() const { return result != RunResult::Unknown; }
};

/// Competition limits per job. Runs exceeding them are flagged by
/// validateBudgets, never silently accepted.
struct ResourceBudget {
  BigRat cpuSeconds = 1800;
  BigRat wallSeconds = 1800;
  int memoryGb = 64;
};

std::vector<Diagnostic> validateBudgets(const std::vector<RunRecord>& runs,
                                        const ResourceBudget& budget);

struct ConsistencyReport {
  struct Conflict {
    std::string benchmarkId;
    std::vector<std::string> satClaimers;
    std::vector<std::string> unsatClaimers;
  };
  std::vector<Conflict> conflicts;
  /// Benchmarks removed from scoring (one per conflict).
  std::vector<std::string> excluded;

  bool clean() const { return conflicts.empty(); }
};

/// Finds benchmarks claimed sat by one solver and unsat by another; those are
/// excluded from all downstream scoring. Throws Error when the input has more
/// than one record per (solver, benchmark) pair.
ConsistencyReport validateConsistency(const std::vector<RunRecord>& runs);

struct ScoreCard {
  std::string solver;
  long score = 0;
  long numSat = 0;
  long numUnsat = 0;
  /// Means over solved runs only; absent when the solver solved nothing.
  std::optional<BigRat> meanCpu;
  std::optional<BigRat> meanWall;
  std::optional<BigRat> speedup;
  std::optional<BigRat> sotac;
  int rank = 0;
  bool tiedRank = false;
  bool horsConcours = false;
  /// Competition place; absent for Hors-Concours entries.
  std::optional<int> place;
};

/// Score = #sat + #unsat over non-excluded benchmarks; CPU/wall means skip
/// unknown results entirely. All records must belong to one solver.
ScoreCard scoreSolver(const std::vector<RunRecord>& runsForOneSolver,
                      const std::set<std::string>& excluded);

/// State-of-the-art contribution: a benchmark solved by k solvers contributes
/// 1/k; a solver's SotAC is the mean over the benchmarks it solved. Solvers
/// that solved nothing are absent from the result.
std::map<std::string, BigRat> sotac(const std::vector<RunRecord>& allRuns,
                                    const std::set<std::string>& excluded);

struct VirtualBest {
  long score = 0;
  long numSat = 0;
  long numUnsat = 0;
};

/// Benchmarks solved by at least one solver, split by their (post-exclusion
/// unique) claimed status. Throws Error if a conflicted benchmark slips in.
VirtualBest virtualBest(const std::vector<RunRecord>& allRuns,
                        const std::set<std::string>& excluded);

/// Sorts descending by score, ties broken by ascending mean CPU time;
/// full ties share a rank and are flagged.
std::vector<ScoreCard> rank(std::vector<ScoreCard> cards);

/// Flags the named solvers and assigns competition places to the remaining
/// cards in rank order. Expects ranked cards.
std::vector<ScoreCard> markHorsConcours(std::vector<ScoreCard> cards,
                                        const std::set<std::string>& flagged);

struct Scoreboard {
  ConsistencyReport consistency;
  std::vector<ScoreCard> cards;  // ranked, places assigned
  VirtualBest anySolver;
};

/// Full scoring pipeline: consistency, per-solver cards, SotAC, ranking,
/// Hors-Concours places, virtual best.
Scoreboard scoreAll(const std::vector<RunRecord>& runs,
                    const std::set<std::string>& horsConcours);

}  // namespace chctk
