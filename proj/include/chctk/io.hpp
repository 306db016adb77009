#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "chctk/evaluation.hpp"
#include "chctk/rating.hpp"
#include "chctk/selection.hpp"

namespace chctk {

/// Schema violation in an input file; carries the 1-based line number.
class FileError : public std::runtime_error {
 public:
  FileError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::string_view content);

/// Run records: header `solver,config,benchmark,result,cpu_seconds,
/// wall_seconds`, result in {sat, unsat, unknown}, times as decimal seconds.
std::vector<RunRecord> parseRunsCsv(std::istream& in);
std::string renderRunsCsv(const std::vector<RunRecord>& runs);

struct RatingRecord {
  std::string benchmarkId;
  std::string repository;
  Rating rating = Rating::C;
};

/// Ratings: one `<digest> <repository> <A|B|C>` record per line.
std::vector<RatingRecord> parseRatingsFile(std::istream& in);
std::string renderRatingsFile(const std::vector<RatingRecord>& records);

/// Quotas: one `<repository> <N_r>` record per line, N_r >= 1.
std::map<std::string, std::size_t> parseQuotasFile(std::istream& in);

struct ProbeRow {
  std::string benchmarkId;
  std::string repository;
  std::string solverName;
  bool solved = false;
};

/// Probe outcomes: header `benchmark,repository,solver,solved`, two rows per
/// benchmark (one per probe solver).
std::vector<ProbeRow> parseProbesCsv(std::istream& in);

/// Manifest: `<repository> <benchmark-id>` per selected benchmark, followed
/// by one `# counts <repository> A=.. B=.. C=.. total=..` summary record per
/// repository.
std::string renderSelectionManifest(const SelectionResult& result);

std::string renderScoreCardsCsv(const std::vector<ScoreCard>& cards);
std::string renderConsistencyCsv(const ConsistencyReport& report);

}  // namespace chctk
