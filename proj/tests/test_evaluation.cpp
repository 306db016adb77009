#include <doctest.h>

#include <algorithm>

#include "chctk/evaluation.hpp"
#include "support/comp20.hpp"

using namespace chctk;
using namespace chctk::testsupport;

namespace {

RunRecord run(const std::string& solver, const std::string& benchmark,
              RunResult result, const char* cpu = "1.0",
              const char* wall = "1.0") {
  RunRecord r;
  r.solver = solver;
  r.config = "default";
  r.benchmarkId = benchmark;
  r.result = result;
  r.cpuSeconds = *parseDecimal(cpu);
  r.wallSeconds = *parseDecimal(wall);
  return r;
}

const ScoreCard& cardOf(const std::vector<ScoreCard>& cards,
                        const std::string& solver) {
  for (const auto& c : cards)
    if (c.solver == solver) return c;
  REQUIRE_MESSAGE(false, "no card for " << solver);
  static ScoreCard dummy;
  return dummy;
}

}  // namespace

TEST_CASE("consistency: sat vs unsat claims exclude the benchmark") {
  std::vector<RunRecord> runs = {
      run("Unihorn", "b381", RunResult::Sat),
      run("Spacer", "b381", RunResult::Unsat),
      run("IC3IA", "b381", RunResult::Unknown),
      run("ProphIC3", "b381", RunResult::Unknown),
      run("Unihorn", "other", RunResult::Sat),
      run("Spacer", "other", RunResult::Sat),
  };
  auto report = validateConsistency(runs);
  REQUIRE(report.conflicts.size() == 1);
  CHECK(report.conflicts[0].benchmarkId == "b381");
  CHECK(report.conflicts[0].satClaimers == std::vector<std::string>{"Unihorn"});
  CHECK(report.conflicts[0].unsatClaimers ==
        std::vector<std::string>{"Spacer"});
  CHECK(report.excluded == std::vector<std::string>{"b381"});
}

TEST_CASE("consistency: agreement and unknowns produce no exclusions") {
  std::vector<RunRecord> runs = {
      run("s1", "b1", RunResult::Sat),
      run("s2", "b1", RunResult::Sat),
      run("s3", "b1", RunResult::Unknown),
      run("s1", "b2", RunResult::Unsat),
      run("s2", "b2", RunResult::Unknown),
  };
  auto report = validateConsistency(runs);
  CHECK(report.clean());
  CHECK(report.excluded.empty());

  CHECK(validateConsistency({}).clean());
}

TEST_CASE("consistency: duplicate (solver, benchmark) pairs are an error") {
  std::vector<RunRecord> runs = {
      run("s1", "b1", RunResult::Sat),
      run("s1", "b1", RunResult::Unknown),
  };
  CHECK_THROWS_WITH_AS(validateConsistency(runs),
                       doctest::Contains("duplicate run records"), Error);
}

TEST_CASE("scoreSolver counts sat and unsat, means skip unknowns") {
  std::vector<RunRecord> runs = {
      run("s", "b1", RunResult::Sat, "10", "5"),
      run("s", "b2", RunResult::Unknown, "1800", "1800"),
  };
  auto card = scoreSolver(runs, {});
  CHECK(card.score == 1);
  CHECK(card.numSat == 1);
  CHECK(card.numUnsat == 0);
  CHECK(*card.meanCpu == BigRat(10));
  CHECK(*card.meanWall == BigRat(5));
  CHECK(*card.speedup == BigRat(2));
}

TEST_CASE("scoreSolver on a zero-score solver leaves means absent") {
  std::vector<RunRecord> runs = {run("s", "b1", RunResult::Unknown)};
  auto card = scoreSolver(runs, {});
  CHECK(card.score == 0);
  CHECK_FALSE(card.meanCpu.has_value());
  CHECK_FALSE(card.meanWall.has_value());
  CHECK_FALSE(card.speedup.has_value());
}

TEST_CASE("scoreSolver refuses mixed solvers and honors exclusions") {
  CHECK_THROWS_AS(scoreSolver({run("a", "b1", RunResult::Sat),
                               run("b", "b2", RunResult::Sat)},
                              {}),
                  Error);

  std::vector<RunRecord> runs = {
      run("s", "b1", RunResult::Sat),
      run("s", "b2", RunResult::Unsat),
  };
  auto card = scoreSolver(runs, {"b2"});
  CHECK(card.score == 1);
  CHECK(card.numUnsat == 0);
}

TEST_CASE("excluding a benchmark reduces scores by exactly its claims") {
  auto track = liaLinArraysResults();
  auto runs = synthesizeRuns(track);
  auto withAll = scoreSolver(
      [&] {
        std::vector<RunRecord> mine;
        for (const auto& r : runs)
          if (r.solver == "Spacer") mine.push_back(r);
        return mine;
      }(),
      {});
  std::set<std::string> excluded = {track.name + "/sat0"};
  auto without = scoreSolver(
      [&] {
        std::vector<RunRecord> mine;
        for (const auto& r : runs)
          if (r.solver == "Spacer") mine.push_back(r);
        return mine;
      }(),
      excluded);
  CHECK(withAll.score - without.score == 1);
}

TEST_CASE("sotac: direct arithmetic from the definition") {
  // b1 solved only by s1 (weight 1), b2 solved by s1 and s2 (weight 1/2).
  std::vector<RunRecord> runs = {
      run("s1", "b1", RunResult::Sat),
      run("s1", "b2", RunResult::Sat),
      run("s2", "b2", RunResult::Unsat),  // conflicting? no: same-status not required for sotac
  };
  runs[2].result = RunResult::Sat;  // keep claims consistent
  auto m = sotac(runs, {});
  CHECK(m.at("s1") == BigRat(3, 4));  // (1 + 1/2) / 2
  CHECK(m.at("s2") == BigRat(1, 2));
}

TEST_CASE("sotac: six solvers sharing one benchmark get 1/6 each") {
  std::vector<RunRecord> runs;
  for (int i = 0; i < 6; ++i)
    runs.push_back(run("s" + std::to_string(i), "b", RunResult::Sat));
  auto m = sotac(runs, {});
  for (int i = 0; i < 6; ++i) CHECK(m.at("s" + std::to_string(i)) == BigRat(1, 6));
}

TEST_CASE("sotac: unsolved solvers are absent; bounds hold") {
  std::vector<RunRecord> runs = {
      run("solves", "b", RunResult::Sat),
      run("givesup", "b", RunResult::Unknown),
  };
  auto m = sotac(runs, {});
  CHECK(m.count("solves") == 1);
  CHECK(m.count("givesup") == 0);

  // 1/S <= sotac <= 1 on a synthesized track with S solvers.
  auto track = liaNonlinResults();
  auto all = synthesizeRuns(track);
  auto contributions = sotac(all, {});
  const BigRat lower(1, static_cast<long>(track.rows.size()));
  for (const auto& [solver, value] : contributions) {
    CHECK(value >= lower);
    CHECK(value <= 1);
  }
}

TEST_CASE("virtual best requires consistency") {
  std::vector<RunRecord> runs = {
      run("s1", "b", RunResult::Sat),
      run("s2", "b", RunResult::Unsat),
  };
  CHECK_THROWS_AS(virtualBest(runs, {}), Error);
  auto vb = virtualBest(runs, {"b"});
  CHECK(vb.score == 0);

  CHECK(virtualBest({}, {}).score == 0);
}

TEST_CASE("rank: descending score, CPU tie-break, full ties flagged") {
  ScoreCard a;
  a.solver = "a";
  a.score = 10;
  a.meanCpu = BigRat(3);
  ScoreCard b;
  b.solver = "b";
  b.score = 5;
  b.meanCpu = BigRat(3);
  ScoreCard c;
  c.solver = "c";
  c.score = 5;
  c.meanCpu = BigRat(4);
  auto ranked = rank({c, b, a});
  CHECK(ranked[0].solver == "a");
  CHECK(ranked[0].rank == 1);
  CHECK(ranked[1].solver == "b");
  CHECK(ranked[1].rank == 2);
  CHECK(ranked[2].solver == "c");
  CHECK(ranked[2].rank == 3);
  for (const auto& card : ranked) CHECK_FALSE(card.tiedRank);

  // Full tie: same score and mean CPU.
  ScoreCard d = c;
  d.solver = "d";
  auto tied = rank({c, d});
  CHECK(tied[0].rank == 1);
  CHECK(tied[1].rank == 1);
  CHECK(tied[0].tiedRank);
  CHECK(tied[1].tiedRank);

  auto single = rank({a});
  CHECK(single[0].rank == 1);
}

TEST_CASE("rank is invariant under input permutation") {
  std::vector<ScoreCard> cards;
  for (int i = 0; i < 6; ++i) {
    ScoreCard c;
    c.solver = "s" + std::to_string(i);
    c.score = 100 - 10 * (i % 3);
    c.meanCpu = BigRat(i + 1);
    cards.push_back(c);
  }
  auto expected = rank(cards);
  std::sort(cards.begin(), cards.end(),
            [](const ScoreCard& x, const ScoreCard& y) {
              return x.solver > y.solver;
            });
  auto permuted = rank(cards);
  REQUIRE(permuted.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(permuted[i].solver == expected[i].solver);
    CHECK(permuted[i].rank == expected[i].rank);
  }
}

TEST_CASE("hors concours solvers keep metrics but not places") {
  ScoreCard first;
  first.solver = "winner";
  first.score = 100;
  first.meanCpu = BigRat(1);
  ScoreCard hc;
  hc.solver = "organiser";
  hc.score = 90;
  hc.meanCpu = BigRat(1);
  ScoreCard second;
  second.solver = "runnerup";
  second.score = 80;
  second.meanCpu = BigRat(1);

  auto cards = markHorsConcours(rank({first, hc, second}), {"organiser"});
  CHECK(cardOf(cards, "winner").place == 1);
  CHECK(cardOf(cards, "organiser").horsConcours);
  CHECK_FALSE(cardOf(cards, "organiser").place.has_value());
  CHECK(cardOf(cards, "organiser").score == 90);
  CHECK(cardOf(cards, "runnerup").place == 2);

  // Empty flag set: places follow rank order.
  auto unflagged = markHorsConcours(rank({first, hc, second}), {});
  CHECK(cardOf(unflagged, "organiser").place == 2);
  CHECK(cardOf(unflagged, "runnerup").place == 3);

  // All flagged: nobody gets a place.
  auto all = markHorsConcours(rank({first, second}),
                              {"winner", "runnerup"});
  for (const auto& c : all) CHECK_FALSE(c.place.has_value());
}

TEST_CASE("budget validation flags runs over the limits") {
  ResourceBudget budget;  // 1800/1800/64
  std::vector<RunRecord> runs = {
      run("ok", "b1", RunResult::Sat, "1800", "1800"),
      run("cpuHog", "b2", RunResult::Sat, "1800.5", "10"),
      run("wallHog", "b3", RunResult::Unknown, "10", "2000"),
  };
  auto diags = validateBudgets(runs, budget);
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].message.find("cpuHog") != std::string::npos);
  CHECK(diags[0].severity == Severity::Warning);
  CHECK(diags[1].message.find("wallHog") != std::string::npos);
}

TEST_CASE("published rows: score identity and exact means") {
  for (const auto* track : allPublishedTracks()) {
    auto runs = synthesizeRuns(*track);
    auto board = scoreAll(runs, {});
    REQUIRE(board.consistency.clean());
    for (const auto& row : track->rows) {
      const ScoreCard& card = cardOf(board.cards, row.solver);
      CHECK_MESSAGE(card.score == row.score, track->name << " " << row.solver);
      CHECK(card.numSat == row.numSat);
      CHECK(card.numUnsat == row.numUnsat);
      CHECK(card.score == card.numSat + card.numUnsat);
      CHECK(fixed2(*card.meanCpu) == row.cpu);
      CHECK(fixed2(*card.meanWall) == row.wall);
      CHECK(fixed2(*card.speedup) == row.speedup);
    }
    CHECK(board.anySolver.score == track->anyScore);
    CHECK(board.anySolver.numSat == track->anySat);
    CHECK(board.anySolver.numUnsat == track->anyUnsat);
  }
}

TEST_CASE("published speedups match recomputation within 0.01") {
  const BigRat tolerance(1, 100);
  for (const auto* track : allPublishedTracks()) {
    for (const auto& row : track->rows) {
      const BigRat cpu = *parseDecimal(row.cpu);
      const BigRat wall = *parseDecimal(row.wall);
      const BigRat recomputed = roundTo2(cpu / wall);
      const BigRat published = *parseDecimal(row.speedup);
      const BigRat diff =
          recomputed > published ? recomputed - published : published - recomputed;
      CHECK_MESSAGE(diff <= tolerance, track->name << " " << row.solver);
    }
  }
}

TEST_CASE("equal scores rank by CPU time: IC3IA above TreeAutomizer") {
  auto runs = synthesizeRuns(liaLinArraysResults());
  auto board = scoreAll(runs, {"Eldarica"});
  const ScoreCard& ic3ia = cardOf(board.cards, "IC3IA");
  const ScoreCard& treeAutomizer = cardOf(board.cards, "Ultimate TreeAutomizer");
  CHECK(ic3ia.score == 147);
  CHECK(treeAutomizer.score == 147);
  CHECK(ic3ia.rank < treeAutomizer.rank);
  CHECK(ic3ia.rank == 4);
  CHECK(treeAutomizer.rank == 5);
}

TEST_CASE("LIA-nonlin places skip the hors-concours entry") {
  auto runs = synthesizeRuns(liaNonlinResults());
  auto board = scoreAll(runs, {"Eldarica"});
  // Eldarica (HC) and Eldarica-abs both score 513; the HC entry ranks higher
  // on CPU time but place 2 goes to Eldarica-abs.
  CHECK(cardOf(board.cards, "Spacer").place == 1);
  CHECK(cardOf(board.cards, "Eldarica").rank == 2);
  CHECK_FALSE(cardOf(board.cards, "Eldarica").place.has_value());
  CHECK(cardOf(board.cards, "Eldarica-abs").rank == 3);
  CHECK(cardOf(board.cards, "Eldarica-abs").place == 2);
  CHECK(cardOf(board.cards, "Ultimate Unihorn").place == 3);
}

TEST_CASE("missing records count as unknown with zero time") {
  // s2 has no record at all on b2; identical to an unknown.
  std::vector<RunRecord> sparse = {
      run("s1", "b1", RunResult::Sat),
      run("s1", "b2", RunResult::Sat),
      run("s2", "b1", RunResult::Sat),
  };
  auto board = scoreAll(sparse, {});
  CHECK(cardOf(board.cards, "s2").score == 1);
  CHECK(board.anySolver.score == 2);
}
