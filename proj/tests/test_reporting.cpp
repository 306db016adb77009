#include <doctest.h>

#include <vector>

#include "chctk/reporting.hpp"
#include "support/comp20.hpp"

using namespace chctk;
using namespace chctk::testsupport;

namespace {

RunRecord solvedRun(const std::string& solver, const std::string& benchmark,
                    const char* cpu, const char* wall) {
  RunRecord r;
  r.solver = solver;
  r.benchmarkId = benchmark;
  r.result = RunResult::Sat;
  r.cpuSeconds = *parseDecimal(cpu);
  r.wallSeconds = *parseDecimal(wall);
  return r;
}

// Checks tag balance and bracket sanity; good enough to catch malformed
// output without an XML library.
bool looksLikeWellFormedXml(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  if (text.rfind("<?xml", 0) == 0) i = text.find("?>") + 2;
  while (i < text.size()) {
    if (text[i] != '<') {
      if (text[i] == '>') return false;
      ++i;
      continue;
    }
    std::size_t end = text.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(i + 1, end - i - 1);
    if (tag.empty()) return false;
    if (tag[0] == '/') {
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else if (tag.back() != '/') {
      std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
      stack.push_back(name);
    }
    i = end + 1;
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("cactus sorts solve times ascending") {
  std::vector<RunRecord> runs = {
      solvedRun("s", "b1", "10", "10"),
      solvedRun("s", "b2", "1", "1"),
      solvedRun("s", "b3", "5", "5"),
  };
  auto series = cactus(runs, TimeKind::Cpu);
  REQUIRE(series.points.size() == 3);
  CHECK(series.points[0].solvedCount == 1);
  CHECK(series.points[0].timeSeconds == BigRat(1));
  CHECK(series.points[1].solvedCount == 2);
  CHECK(series.points[1].timeSeconds == BigRat(5));
  CHECK(series.points[2].solvedCount == 3);
  CHECK(series.points[2].timeSeconds == BigRat(10));
}

TEST_CASE("cactus of unsolved runs is empty; wall vs cpu differ") {
  RunRecord unknown;
  unknown.solver = "s";
  unknown.benchmarkId = "b";
  unknown.result = RunResult::Unknown;
  CHECK(cactus({unknown}, TimeKind::Cpu).points.empty());

  std::vector<RunRecord> runs = {solvedRun("s", "b", "10", "4")};
  CHECK(cactus(runs, TimeKind::Cpu).points[0].timeSeconds == BigRat(10));
  CHECK(cactus(runs, TimeKind::Wall).points[0].timeSeconds == BigRat(4));
}

TEST_CASE("cactus length equals the solver's score") {
  auto runs = synthesizeRuns(lraTsResults());
  auto board = scoreAll(runs, {});
  for (const auto& card : board.cards) {
    std::vector<RunRecord> mine;
    for (const auto& r : runs)
      if (r.solver == card.solver) mine.push_back(r);
    auto series = cactus(mine, TimeKind::Cpu);
    CHECK(series.points.size() == static_cast<std::size_t>(card.score));
    // Non-decreasing step function.
    for (std::size_t i = 1; i < series.points.size(); ++i) {
      CHECK(series.points[i].solvedCount == i + 1);
      CHECK(series.points[i].timeSeconds >= series.points[i - 1].timeSeconds);
    }
  }
}

TEST_CASE("appending a solved run never decreases earlier cactus points") {
  std::vector<RunRecord> runs = {
      solvedRun("s", "b1", "7", "7"),
      solvedRun("s", "b2", "2", "2"),
  };
  auto before = cactus(runs, TimeKind::Cpu);
  runs.push_back(solvedRun("s", "b3", "4", "4"));
  auto after = cactus(runs, TimeKind::Cpu);
  REQUIRE(after.points.size() == before.points.size() + 1);
  for (std::size_t i = 0; i < before.points.size(); ++i)
    CHECK(after.points[i].timeSeconds <= before.points[i].timeSeconds);
}

TEST_CASE("renderTable reproduces the published row format") {
  auto runs = synthesizeRuns(liaNonlinResults());
  auto board = scoreAll(runs, {"Eldarica"});
  std::string table = renderTable(board.cards, board.anySolver);
  CHECK(table.find("Spacer | 554 | 292 | 262 | 6.03 | 6.11 | 0.99 |") !=
        std::string::npos);
  CHECK(table.find("Eldarica (HC) | 513 | 265 | 248 | 43.58 | 19.10 | 2.28 |") !=
        std::string::npos);
  CHECK(table.find("| Any solver | 560 | 298 | 262 | - | - | - | - |") !=
        std::string::npos);
  // Row count: header + separator + cards + any-solver.
  std::size_t rows = 0;
  for (char c : table)
    if (c == '\n') ++rows;
  CHECK(rows == 2 + board.cards.size() + 1);
}

TEST_CASE("renderTable edge rows") {
  CHECK(renderTable({}, VirtualBest{}) ==
        "| Solver | Score | #sat | #unsat | CPU time (s) | Wall-clock (s) | "
        "Speedup | SotAC |\n|---|---:|---:|---:|---:|---:|---:|---:|\n");

  ScoreCard zero;
  zero.solver = "idle";
  std::string table = renderTable({zero}, std::nullopt);
  CHECK(table.find("| idle | 0 | 0 | 0 | - | - | - | - |") != std::string::npos);
}

TEST_CASE("cactus CSV shape and quoting") {
  CactusSeries plain{"solver-a", {{1, BigRat(1, 2)}, {2, BigRat(3)}}};
  CactusSeries quoted{"name, with \"comma\"", {{1, BigRat(1)}}};
  std::string csv = cactusCsv({plain, quoted});
  CHECK(csv.find("solver,solved_count,time_seconds\n") == 0);
  CHECK(csv.find("solver-a,1,0.5\n") != std::string::npos);
  CHECK(csv.find("solver-a,2,3\n") != std::string::npos);
  CHECK(csv.find("\"name, with \"\"comma\"\"\",1,1\n") != std::string::npos);
}

TEST_CASE("SVG: polylines, legend, determinism") {
  CactusSeries s1{"alpha", {{1, BigRat(1)}, {2, BigRat(10)}}};
  CactusSeries s2{"beta & <co>", {{1, BigRat(2)}}};
  SvgAxisConfig config;
  std::string svg = renderCactusSvg({s1, s2}, config);

  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
  std::size_t polylines = 0;
  for (std::size_t at = svg.find("<polyline"); at != std::string::npos;
       at = svg.find("<polyline", at + 1))
    ++polylines;
  CHECK(polylines == 2);
  CHECK(svg.find("alpha") != std::string::npos);
  CHECK(svg.find("beta &amp; &lt;co&gt;") != std::string::npos);
  CHECK(looksLikeWellFormedXml(svg));

  CHECK(renderCactusSvg({s1, s2}, config) == svg);  // byte-identical
}

TEST_CASE("SVG: empty series are skipped with a warning") {
  CactusSeries empty{"lazy", {}};
  CactusSeries one{"worker", {{1, BigRat(1)}}};
  std::vector<std::string> warnings;
  std::string svg = renderCactusSvg({empty, one}, SvgAxisConfig{}, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("lazy") != std::string::npos);
  CHECK(svg.find("lazy") == std::string::npos);
  CHECK(svg.find("worker") != std::string::npos);
}

TEST_CASE("SVG: log axis clamps zero times to epsilon") {
  CactusSeries s{"zero", {{1, BigRat(0)}, {2, BigRat(100)}}};
  SvgAxisConfig config;
  config.logTime = true;
  std::string svg = renderCactusSvg({s}, config);
  CHECK(looksLikeWellFormedXml(svg));
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
}
