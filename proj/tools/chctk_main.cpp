// chctk: CHC benchmark pipeline front-end.
//
// Subcommands: check, normalize, dedup, rate, select, score, report.
// Exit codes: 0 success, 1 domain failure (nonconformant input, conflicts
// under the abort policy), 2 usage or I/O error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chctk/checker.hpp"
#include "chctk/io.hpp"
#include "chctk/parser.hpp"
#include "chctk/printer.hpp"
#include "chctk/reporting.hpp"
#include "chctk/transform.hpp"

namespace fs = std::filesystem;
using namespace chctk;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string quotasPath;
  std::string outDir = ".";
  std::string cpuBudget = "1800";
  std::string wallBudget = "1800";
  int memoryBudget = 64;
  std::string conflictPolicy = "exclude";
};

void printDiagnostics(const std::string& path,
                      const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << path << ": " << d.str() << "\n";
}

std::optional<Benchmark> loadBenchmark(const std::string& path,
                                       bool& anyFailure) {
  std::string text;
  try {
    text = readFile(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    anyFailure = true;
    return std::nullopt;
  }
  ParseResult parsed = parseBenchmark(text, path);
  printDiagnostics(path, parsed.diagnostics);
  if (!parsed.ok()) {
    anyFailure = true;
    return std::nullopt;
  }
  return std::move(parsed.benchmark);
}

ResourceBudget makeBudget(const GlobalOptions& global) {
  ResourceBudget budget;
  auto cpu = parseDecimal(global.cpuBudget);
  auto wall = parseDecimal(global.wallBudget);
  if (!cpu || !wall)
    throw std::runtime_error("budgets must be non-negative decimal seconds");
  budget.cpuSeconds = *cpu;
  budget.wallSeconds = *wall;
  budget.memoryGb = global.memoryBudget;
  return budget;
}

// --- check -----------------------------------------------------------------

int cmdCheck(const std::vector<std::string>& paths) {
  bool allConformant = true;
  for (const auto& path : paths) {
    bool failed = false;
    auto benchmark = loadBenchmark(path, failed);
    if (!benchmark) {
      std::cout << path << " fail " << trackName(Track::Unclassified) << "\n";
      allConformant = false;
      continue;
    }
    CheckReport report = checkFragment(*benchmark);
    printDiagnostics(path, report.violations);
    std::cout << path << " " << (report.conformant ? "ok" : "fail") << " "
              << trackName(report.track) << "\n";
    allConformant = allConformant && report.conformant;
  }
  return allConformant ? 0 : 1;
}

// --- normalize ---------------------------------------------------------------

int cmdNormalize(const std::vector<std::string>& paths, const std::string& mode,
                 const std::string& outDir) {
  fs::create_directories(outDir);
  bool anyFailure = false;
  for (const auto& path : paths) {
    auto benchmark = loadBenchmark(path, anyFailure);
    if (!benchmark) continue;
    const std::string stem = fs::path(path).stem().string();
    try {
      if (mode == "merge") {
        Benchmark merged = mergeQueries(*benchmark);
        fs::path out = fs::path(outDir) / (stem + ".smt2");
        writeFile(out, printCanonical(merged));
        std::cout << "wrote " << out.string() << "\n";
      } else {
        std::vector<Benchmark> parts = splitQueries(*benchmark);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          fs::path out =
              fs::path(outDir) / (stem + "_q" + std::to_string(i + 1) + ".smt2");
          writeFile(out, printCanonical(parts[i]));
          std::cout << "wrote " << out.string() << "\n";
        }
      }
    } catch (const Error& e) {
      std::cerr << path << ": " << e.what() << "\n";
      anyFailure = true;
    }
  }
  return anyFailure ? 1 : 0;
}

// --- dedup -------------------------------------------------------------------

int cmdDedup(const std::vector<std::string>& paths, const std::string& outDir) {
  fs::create_directories(outDir);
  bool anyFailure = false;
  std::vector<Benchmark> benchmarks;
  for (const auto& path : paths) {
    if (auto b = loadBenchmark(path, anyFailure)) benchmarks.push_back(std::move(*b));
  }
  DedupResult result = dedup(benchmarks);

  std::ostringstream manifest;
  for (const auto& b : result.unique)
    manifest << b.checksum->hex() << " " << b.origin << "\n";
  std::ostringstream dropped;
  for (const auto& [dup, kept] : result.dropped)
    dropped << dup << " " << kept << "\n";

  writeFile(fs::path(outDir) / "manifest.txt", manifest.str());
  writeFile(fs::path(outDir) / "duplicates.txt", dropped.str());
  std::cout << result.unique.size() << " unique, " << result.dropped.size()
            << " duplicate(s)\n";
  return anyFailure ? 1 : 0;
}

// --- rate --------------------------------------------------------------------

int cmdRate(const std::string& probesPath, const std::string& outPath) {
  std::istringstream in(readFile(probesPath));
  std::vector<ProbeRow> rows = parseProbesCsv(in);

  std::vector<std::string> order;
  std::map<std::string, std::vector<ProbeRow>> byBenchmark;
  for (auto& row : rows) {
    auto [it, inserted] = byBenchmark.try_emplace(row.benchmarkId);
    if (inserted) order.push_back(row.benchmarkId);
    it->second.push_back(std::move(row));
  }

  std::vector<RatingRecord> records;
  for (const auto& id : order) {
    const auto& probes = byBenchmark.at(id);
    if (probes.size() != 2)
      throw Error("benchmark '" + id + "' has " +
                  std::to_string(probes.size()) +
                  " probe outcome(s); exactly two probe solvers are required");
    if (probes[0].repository != probes[1].repository)
      throw Error("benchmark '" + id + "' listed under two repositories");
    Rating r = rate({probes[0].benchmarkId, probes[0].solverName, probes[0].solved},
                    {probes[1].benchmarkId, probes[1].solverName, probes[1].solved});
    records.push_back({id, probes[0].repository, r});
  }
  writeFile(outPath, renderRatingsFile(records));
  std::cout << "rated " << records.size() << " benchmark(s)\n";
  return 0;
}

// --- select ------------------------------------------------------------------

int cmdSelect(const std::string& ratingsPath, const GlobalOptions& global,
              const std::string& outPath) {
  if (global.quotasPath.empty())
    throw std::runtime_error("select requires --quotas");
  std::istringstream ratingsIn(readFile(ratingsPath));
  std::vector<RatingRecord> records = parseRatingsFile(ratingsIn);
  std::istringstream quotasIn(readFile(global.quotasPath));

  SelectionPolicy policy;
  policy.perRepoQuota = parseQuotasFile(quotasIn);
  policy.seed = global.seed;

  std::map<std::string, RatedPools> rated;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : records) {
    if (!seen.emplace(r.repository, r.benchmarkId).second)
      throw Error("duplicate rating for benchmark '" + r.benchmarkId +
                  "' in repository '" + r.repository + "'");
    RatedPools& pools = rated[r.repository];
    switch (r.rating) {
      case Rating::A: pools.a.push_back(r.benchmarkId); break;
      case Rating::B: pools.b.push_back(r.benchmarkId); break;
      case Rating::C: pools.c.push_back(r.benchmarkId); break;
    }
  }

  SelectionResult result = selectAll(rated, policy);
  writeFile(outPath, renderSelectionManifest(result));
  std::cout << "selected " << result.totalChosen() << " benchmark(s) from "
            << rated.size() << " repositor(ies)\n";
  return 0;
}

// --- score -------------------------------------------------------------------

int cmdScore(const std::string& runsPath, const GlobalOptions& global,
             const std::vector<std::string>& horsConcours) {
  std::istringstream in(readFile(runsPath));
  std::vector<RunRecord> runs = parseRunsCsv(in);

  for (const auto& d : validateBudgets(runs, makeBudget(global)))
    std::cerr << runsPath << ": " << d.str() << "\n";

  std::set<std::string> flagged(horsConcours.begin(), horsConcours.end());
  Scoreboard board = scoreAll(runs, flagged);

  if (global.conflictPolicy == "abort" && !board.consistency.clean()) {
    for (const auto& c : board.consistency.conflicts)
      std::cerr << "conflict on '" << c.benchmarkId << "'\n";
    std::cerr << "aborting: inconsistent results (policy=abort)\n";
    return 1;
  }

  fs::create_directories(global.outDir);
  writeFile(fs::path(global.outDir) / "scorecards.csv",
            renderScoreCardsCsv(board.cards));
  writeFile(fs::path(global.outDir) / "consistency.csv",
            renderConsistencyCsv(board.consistency));
  std::cout << board.cards.size() << " solver(s), "
            << board.consistency.excluded.size()
            << " benchmark(s) excluded for conflicting results\n";
  return 0;
}

// --- report ------------------------------------------------------------------

int cmdReport(const std::string& runsPath, const GlobalOptions& global,
              const std::vector<std::string>& horsConcours, bool logAxis,
              const std::string& title) {
  std::istringstream in(readFile(runsPath));
  std::vector<RunRecord> runs = parseRunsCsv(in);

  std::set<std::string> flagged(horsConcours.begin(), horsConcours.end());
  Scoreboard board = scoreAll(runs, flagged);
  std::set<std::string> excluded(board.consistency.excluded.begin(),
                                 board.consistency.excluded.end());

  std::map<std::string, std::vector<RunRecord>> bySolver;
  for (const auto& r : runs) {
    if (excluded.count(r.benchmarkId) > 0) continue;
    bySolver[r.solver].push_back(r);
  }
  std::vector<CactusSeries> cpuSeries, wallSeries;
  for (const auto& card : board.cards) {  // rank order
    auto it = bySolver.find(card.solver);
    if (it == bySolver.end()) continue;
    cpuSeries.push_back(cactus(it->second, TimeKind::Cpu));
    wallSeries.push_back(cactus(it->second, TimeKind::Wall));
  }

  fs::create_directories(global.outDir);
  std::ostringstream md;
  if (!title.empty()) md << "# " << title << "\n\n";
  md << renderTable(board.cards,
                    board.cards.empty()
                        ? std::nullopt
                        : std::optional<VirtualBest>(board.anySolver));
  writeFile(fs::path(global.outDir) / "report.md", md.str());
  writeFile(fs::path(global.outDir) / "cactus_cpu.csv", cactusCsv(cpuSeries));
  writeFile(fs::path(global.outDir) / "cactus_wall.csv", cactusCsv(wallSeries));

  SvgAxisConfig axis;
  axis.logTime = logAxis;
  axis.title = title;
  std::vector<std::string> warnings;
  axis.timeLabel = "CPU time (s)";
  writeFile(fs::path(global.outDir) / "cactus_cpu.svg",
            renderCactusSvg(cpuSeries, axis, &warnings));
  axis.timeLabel = "wall-clock time (s)";
  writeFile(fs::path(global.outDir) / "cactus_wall.svg",
            renderCactusSvg(wallSeries, axis, &warnings));
  for (const auto& w : warnings) std::cerr << w << "\n";

  std::cout << "wrote report.md, cactus CSV, and SVG under " << global.outDir
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CHC benchmark pipeline toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file (flags win)");

  GlobalOptions global;
  app.add_option("--seed", global.seed, "selection seed (64-bit unsigned)");
  app.add_option("--quotas", global.quotasPath,
                 "per-repository quota file for select");
  app.add_option("--out-dir", global.outDir, "output directory");
  app.add_option("--cpu-budget", global.cpuBudget,
                 "CPU seconds budget per run");
  app.add_option("--wall-budget", global.wallBudget,
                 "wall-clock seconds budget per run");
  app.add_option("--memory-budget", global.memoryBudget, "memory budget (GB)");
  app.add_option("--conflict-policy", global.conflictPolicy,
                 "exclude conflicted benchmarks, or abort")
      ->check(CLI::IsMember({"exclude", "abort"}));

  std::vector<std::string> paths;
  std::string mode = "merge";
  std::string probesPath, ratingsPath, runsPath, outPath;
  std::vector<std::string> horsConcours;
  bool logAxis = false;
  std::string title;

  CLI::App* check = app.add_subcommand("check", "conformance + track per file");
  check->add_option("paths", paths, "benchmark files");

  CLI::App* normalize =
      app.add_subcommand("normalize", "merge or split multi-query benchmarks");
  normalize->add_option("paths", paths, "benchmark files");
  normalize->add_option("--mode", mode, "merge or split")
      ->check(CLI::IsMember({"merge", "split"}));

  CLI::App* dedupCmd =
      app.add_subcommand("dedup", "drop duplicates by canonical checksum");
  dedupCmd->add_option("paths", paths, "benchmark files");

  CLI::App* rateCmd =
      app.add_subcommand("rate", "A/B/C ratings from probe outcomes");
  rateCmd->add_option("--probes", probesPath, "probe outcome CSV")->required();
  rateCmd->add_option("--out", outPath, "ratings file to write")->required();

  CLI::App* select =
      app.add_subcommand("select", "per-repository quota selection");
  select->add_option("--ratings", ratingsPath, "ratings file")->required();
  select->add_option("--out", outPath, "selection manifest to write")
      ->required();

  CLI::App* score = app.add_subcommand("score", "scorecards from run records");
  score->add_option("--runs", runsPath, "run-record CSV")->required();
  score->add_option("--hors-concours", horsConcours,
                    "solver evaluated outside the competition");

  CLI::App* report = app.add_subcommand("report", "markdown + cactus outputs");
  report->add_option("--runs", runsPath, "run-record CSV")->required();
  report->add_option("--hors-concours", horsConcours,
                     "solver evaluated outside the competition");
  report->add_flag("--log-axis", logAxis, "logarithmic time axis");
  report->add_option("--title", title, "report title");

  // Global options remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmdCheck(paths);
    if (normalize->parsed()) return cmdNormalize(paths, mode, global.outDir);
    if (dedupCmd->parsed()) return cmdDedup(paths, global.outDir);
    if (rateCmd->parsed()) return cmdRate(probesPath, outPath);
    if (select->parsed()) return cmdSelect(ratingsPath, global, outPath);
    if (score->parsed()) return cmdScore(runsPath, global, horsConcours);
    if (report->parsed())
      return cmdReport(runsPath, global, horsConcours, logAxis, title);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
