#include "chctk/evaluation.hpp"

#include <algorithm>

namespace chctk {

std::string_view runResultName(RunResult result) {
  switch (result) {
    case RunResult::Sat: return "sat";
    case RunResult::Unsat: return "unsat";
    case RunResult::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<RunResult> runResultFromName(std::string_view name) {
  if (name == "sat") return RunResult::Sat;
  if (name == "unsat") return RunResult::Unsat;
  if (name == "unknown") return RunResult::Unknown;
  return std::nullopt;
}

std::vector<Diagnostic> validateBudgets(const std::vector<RunRecord>& runs,
                                        const ResourceBudget& budget) {
  std::vector<Diagnostic> out;
  for (const auto& r : runs) {
    if (r.cpuSeconds > budget.cpuSeconds) {
      out.push_back({Severity::Warning,
                     "run " + r.solver + " on " + r.benchmarkId +
                         " exceeds the CPU budget: " +
                         decimalString(r.cpuSeconds) + "s > " +
                         decimalString(budget.cpuSeconds) + "s",
                     {}});
    }
    if (r.wallSeconds > budget.wallSeconds) {
      out.push_back({Severity::Warning,
                     "run " + r.solver + " on " + r.benchmarkId +
                         " exceeds the wall-clock budget: " +
                         decimalString(r.wallSeconds) + "s > " +
                         decimalString(budget.wallSeconds) + "s",
                     {}});
    }
  }
  return out;
}

ConsistencyReport validateConsistency(const std::vector<RunRecord>& runs) {
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> duplicates;
  std::map<std::string, std::set<std::string>> satBy, unsatBy;
  for (const auto& r : runs) {
    if (!seen.emplace(r.solver, r.benchmarkId).second)
      duplicates.push_back(r.solver + " on " + r.benchmarkId);
    if (r.result == RunResult::Sat) satBy[r.benchmarkId].insert(r.solver);
    if (r.result == RunResult::Unsat) unsatBy[r.benchmarkId].insert(r.solver);
  }
  if (!duplicates.empty()) {
    std::string msg = "duplicate run records:";
    for (const auto& d : duplicates) msg += " [" + d + "]";
    throw Error(msg);
  }

  ConsistencyReport report;
  for (const auto& [benchmark, claimers] : satBy) {
    auto other = unsatBy.find(benchmark);
    if (other == unsatBy.end()) continue;
    ConsistencyReport::Conflict conflict;
    conflict.benchmarkId = benchmark;
    conflict.satClaimers.assign(claimers.begin(), claimers.end());
    conflict.unsatClaimers.assign(other->second.begin(), other->second.end());
    report.conflicts.push_back(std::move(conflict));
    report.excluded.push_back(benchmark);
  }
  return report;
}

ScoreCard scoreSolver(const std::vector<RunRecord>& runs,
                      const std::set<std::string>& excluded) {
  ScoreCard card;
  BigRat cpuTotal = 0, wallTotal = 0;
  for (const auto& r : runs) {
    if (card.solver.empty()) {
      card.solver = r.solver;
    } else if (card.solver != r.solver) {
      throw Error("scoreSolver got records for '" + card.solver + "' and '" +
                  r.solver + "'");
    }
    if (excluded.count(r.benchmarkId) > 0) continue;
    if (!r.solved()) continue;
    if (r.result == RunResult::Sat) ++card.numSat;
    if (r.result == RunResult::Unsat) ++card.numUnsat;
    cpuTotal += r.cpuSeconds;
    wallTotal += r.wallSeconds;
  }
  card.score = card.numSat + card.numUnsat;
  if (card.score > 0) {
    card.meanCpu = cpuTotal / card.score;
    card.meanWall = wallTotal / card.score;
    if (*card.meanWall > 0) card.speedup = *card.meanCpu / *card.meanWall;
  }
  return card;
}

std::map<std::string, BigRat> sotac(const std::vector<RunRecord>& allRuns,
                                    const std::set<std::string>& excluded) {
  std::map<std::string, long> solverCount;  // benchmark -> #solvers solving it
  for (const auto& r : allRuns) {
    if (!r.solved() || excluded.count(r.benchmarkId) > 0) continue;
    ++solverCount[r.benchmarkId];
  }
  std::map<std::string, BigRat> contribution;
  std::map<std::string, long> solvedCount;
  for (const auto& r : allRuns) {
    if (!r.solved() || excluded.count(r.benchmarkId) > 0) continue;
    contribution[r.solver] += BigRat(1, solverCount.at(r.benchmarkId));
    ++solvedCount[r.solver];
  }
  std::map<std::string, BigRat> result;
  for (auto& [solver, sum] : contribution)
    result.emplace(solver, sum / solvedCount.at(solver));
  return result;
}

VirtualBest virtualBest(const std::vector<RunRecord>& allRuns,
                        const std::set<std::string>& excluded) {
  std::map<std::string, RunResult> status;
  for (const auto& r : allRuns) {
    if (!r.solved() || excluded.count(r.benchmarkId) > 0) continue;
    auto [it, inserted] = status.emplace(r.benchmarkId, r.result);
    if (!inserted && it->second != r.result)
      throw Error("conflicting claims on benchmark '" + r.benchmarkId +
                  "'; enforce consistency before computing the virtual best");
  }
  VirtualBest vb;
  for (const auto& [benchmark, result] : status) {
    if (result == RunResult::Sat) ++vb.numSat;
    if (result == RunResult::Unsat) ++vb.numUnsat;
  }
  vb.score = vb.numSat + vb.numUnsat;
  return vb;
}

namespace {

// Sort key: score descending, mean CPU ascending (absent last), then name
// for a stable total order.
bool cardBefore(const ScoreCard& x, const ScoreCard& y) {
  if (x.score != y.score) return x.score > y.score;
  if (x.meanCpu.has_value() != y.meanCpu.has_value())
    return x.meanCpu.has_value();
  if (x.meanCpu && y.meanCpu && *x.meanCpu != *y.meanCpu)
    return *x.meanCpu < *y.meanCpu;
  return x.solver < y.solver;
}

bool cardTies(const ScoreCard& x, const ScoreCard& y) {
  if (x.score != y.score) return false;
  if (x.meanCpu.has_value() != y.meanCpu.has_value()) return false;
  return !x.meanCpu || *x.meanCpu == *y.meanCpu;
}

}  // namespace

std::vector<ScoreCard> rank(std::vector<ScoreCard> cards) {
  std::sort(cards.begin(), cards.end(), cardBefore);
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (i > 0 && cardTies(cards[i], cards[i - 1])) {
      cards[i].rank = cards[i - 1].rank;
      cards[i].tiedRank = true;
      cards[i - 1].tiedRank = true;
    } else {
      cards[i].rank = static_cast<int>(i) + 1;
      cards[i].tiedRank = false;
    }
  }
  return cards;
}

std::vector<ScoreCard> markHorsConcours(std::vector<ScoreCard> cards,
                                        const std::set<std::string>& flagged) {
  long placed = 0;
  const ScoreCard* previous = nullptr;
  for (auto& card : cards) {
    card.horsConcours = flagged.count(card.solver) > 0;
    if (card.horsConcours) {
      card.place.reset();
      continue;
    }
    ++placed;
    if (previous != nullptr && cardTies(card, *previous)) {
      card.place = previous->place;
    } else {
      card.place = static_cast<int>(placed);
    }
    previous = &card;
  }
  return cards;
}

Scoreboard scoreAll(const std::vector<RunRecord>& runs,
                    const std::set<std::string>& horsConcours) {
  Scoreboard board;
  board.consistency = validateConsistency(runs);
  std::set<std::string> excluded(board.consistency.excluded.begin(),
                                 board.consistency.excluded.end());

  std::map<std::string, std::vector<RunRecord>> bySolver;
  for (const auto& r : runs) bySolver[r.solver].push_back(r);

  std::map<std::string, BigRat> contributions = sotac(runs, excluded);
  std::vector<ScoreCard> cards;
  cards.reserve(bySolver.size());
  for (const auto& [solver, solverRuns] : bySolver) {
    ScoreCard card = scoreSolver(solverRuns, excluded);
    if (auto it = contributions.find(solver); it != contributions.end())
      card.sotac = it->second;
    cards.push_back(std::move(card));
  }
  board.cards = markHorsConcours(rank(std::move(cards)), horsConcours);
  board.anySolver = virtualBest(runs, excluded);
  return board;
}

}  // namespace chctk
