#include "chctk/io.hpp"

#include <fstream>
#include <sstream>

namespace chctk {

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

namespace {

// RFC-4180-style field splitting; returns false at end of input.
bool readCsvRow(std::istream& in, std::vector<std::string>& fields,
                int& lineNo) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++lineNo;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (quoted) {
        // Quoted fields may span lines.
        std::string next;
        if (!std::getline(in, next)) throw FileError(lineNo, "unterminated quoted field");
        ++lineNo;
        if (!next.empty() && next.back() == '\r') next.pop_back();
        field += "\n";
        line = std::move(next);
        i = 0;
        continue;
      }
      fields.push_back(std::move(field));
      return true;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field.push_back(c);
        ++i;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
      ++i;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      ++i;
    } else {
      field.push_back(c);
      ++i;
    }
  }
}

std::string csvField(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

BigRat parseTimeField(const std::string& text, int lineNo, const char* what) {
  auto value = parseDecimal(text);
  if (!value)
    throw FileError(lineNo, std::string("malformed ") + what + " '" + text +
                                "' (expected non-negative decimal seconds)");
  return *value;
}

}  // namespace

std::vector<RunRecord> parseRunsCsv(std::istream& in) {
  int lineNo = 0;
  std::vector<std::string> fields;
  if (!readCsvRow(in, fields, lineNo))
    throw FileError(1, "empty run-record file");
  const std::vector<std::string> header = {
      "solver", "config", "benchmark", "result", "cpu_seconds", "wall_seconds"};
  if (fields != header)
    throw FileError(1,
                    "bad header; expected "
                    "solver,config,benchmark,result,cpu_seconds,wall_seconds");

  std::vector<RunRecord> runs;
  while (readCsvRow(in, fields, lineNo)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 6)
      throw FileError(lineNo, "expected 6 fields, got " +
                                  std::to_string(fields.size()));
    RunRecord r;
    r.solver = fields[0];
    r.config = fields[1];
    r.benchmarkId = fields[2];
    if (r.solver.empty()) throw FileError(lineNo, "empty solver name");
    if (r.benchmarkId.empty()) throw FileError(lineNo, "empty benchmark id");
    auto result = runResultFromName(fields[3]);
    if (!result)
      throw FileError(lineNo, "result must be sat, unsat, or unknown; got '" +
                                  fields[3] + "'");
    r.result = *result;
    r.cpuSeconds = parseTimeField(fields[4], lineNo, "cpu_seconds");
    r.wallSeconds = parseTimeField(fields[5], lineNo, "wall_seconds");
    runs.push_back(std::move(r));
  }
  return runs;
}

std::string renderRunsCsv(const std::vector<RunRecord>& runs) {
  std::ostringstream out;
  out << "solver,config,benchmark,result,cpu_seconds,wall_seconds\n";
  for (const auto& r : runs) {
    out << csvField(r.solver) << "," << csvField(r.config) << ","
        << csvField(r.benchmarkId) << "," << runResultName(r.result) << ","
        << decimalString(r.cpuSeconds) << "," << decimalString(r.wallSeconds)
        << "\n";
  }
  return out.str();
}

std::vector<RatingRecord> parseRatingsFile(std::istream& in) {
  std::vector<RatingRecord> records;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream fields(line);
    std::string id, repo, letter;
    if (!(fields >> id)) continue;  // blank line
    if (id[0] == '#') continue;
    if (!(fields >> repo >> letter) || letter.size() != 1)
      throw FileError(lineNo, "expected '<id> <repository> <A|B|C>'");
    std::string extra;
    if (fields >> extra) throw FileError(lineNo, "trailing fields");
    auto rating = ratingFromLetter(letter[0]);
    if (!rating)
      throw FileError(lineNo, "rating must be A, B, or C; got '" + letter + "'");
    records.push_back({std::move(id), std::move(repo), *rating});
  }
  return records;
}

std::string renderRatingsFile(const std::vector<RatingRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records)
    out << r.benchmarkId << " " << r.repository << " " << ratingLetter(r.rating)
        << "\n";
  return out.str();
}

std::map<std::string, std::size_t> parseQuotasFile(std::istream& in) {
  std::map<std::string, std::size_t> quotas;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream fields(line);
    std::string repo;
    long quota = 0;
    if (!(fields >> repo)) continue;
    if (repo[0] == '#') continue;
    if (!(fields >> quota) || quota < 1)
      throw FileError(lineNo, "expected '<repository> <positive quota>'");
    std::string extra;
    if (fields >> extra) throw FileError(lineNo, "trailing fields");
    if (!quotas.emplace(repo, static_cast<std::size_t>(quota)).second)
      throw FileError(lineNo, "duplicate quota for repository '" + repo + "'");
  }
  return quotas;
}

std::vector<ProbeRow> parseProbesCsv(std::istream& in) {
  int lineNo = 0;
  std::vector<std::string> fields;
  if (!readCsvRow(in, fields, lineNo))
    throw FileError(1, "empty probe-outcome file");
  const std::vector<std::string> header = {"benchmark", "repository", "solver",
                                           "solved"};
  if (fields != header)
    throw FileError(1, "bad header; expected benchmark,repository,solver,solved");

  std::vector<ProbeRow> rows;
  while (readCsvRow(in, fields, lineNo)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 4)
      throw FileError(lineNo, "expected 4 fields, got " +
                                  std::to_string(fields.size()));
    ProbeRow row;
    row.benchmarkId = fields[0];
    row.repository = fields[1];
    row.solverName = fields[2];
    if (fields[3] == "true" || fields[3] == "1") {
      row.solved = true;
    } else if (fields[3] == "false" || fields[3] == "0") {
      row.solved = false;
    } else {
      throw FileError(lineNo, "solved must be true/false/1/0; got '" +
                                  fields[3] + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string renderSelectionManifest(const SelectionResult& result) {
  std::ostringstream out;
  for (const auto& [repo, ids] : result.chosen)
    for (const auto& id : ids) out << repo << " " << id << "\n";
  for (const auto& [repo, counts] : result.counts) {
    out << "# counts " << repo << " A=" << counts.takenA
        << " B=" << counts.takenB << " C=" << counts.takenC
        << " total=" << counts.total() << "\n";
  }
  return out.str();
}

std::string renderScoreCardsCsv(const std::vector<ScoreCard>& cards) {
  std::ostringstream out;
  out << "solver,score,num_sat,num_unsat,mean_cpu,mean_wall,speedup,sotac,"
         "rank,tied,hors_concours,place\n";
  auto opt = [](const std::optional<BigRat>& v) {
    return v ? fixed2(*v) : std::string();
  };
  for (const auto& c : cards) {
    out << csvField(c.solver) << "," << c.score << "," << c.numSat << ","
        << c.numUnsat << "," << opt(c.meanCpu) << "," << opt(c.meanWall) << ","
        << opt(c.speedup) << "," << opt(c.sotac) << "," << c.rank << ","
        << (c.tiedRank ? "1" : "0") << "," << (c.horsConcours ? "1" : "0")
        << "," << (c.place ? std::to_string(*c.place) : std::string()) << "\n";
  }
  return out.str();
}

std::string renderConsistencyCsv(const ConsistencyReport& report) {
  std::ostringstream out;
  out << "benchmark,sat_claimers,unsat_claimers\n";
  auto join = [](const std::vector<std::string>& names) {
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) joined += ";";
      joined += names[i];
    }
    return joined;
  };
  for (const auto& c : report.conflicts) {
    out << csvField(c.benchmarkId) << "," << csvField(join(c.satClaimers))
        << "," << csvField(join(c.unsatClaimers)) << "\n";
  }
  return out.str();
}

}  // namespace chctk
