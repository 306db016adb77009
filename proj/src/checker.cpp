#include "chctk/checker.hpp"

#include <algorithm>

namespace chctk {

std::string_view trackName(Track track) {
  switch (track) {
    case Track::LiaNonlin: return "LIA-nonlin";
    case Track::LiaLin: return "LIA-lin";
    case Track::LiaLinArrays: return "LIA-lin-arrays";
    case Track::LraTs: return "LRA-TS";
    case Track::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

std::optional<Track> trackFromName(std::string_view name) {
  for (Track t : {Track::LiaNonlin, Track::LiaLin, Track::LiaLinArrays,
                  Track::LraTs, Track::Unclassified}) {
    if (trackName(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

void sortTheories(const Sort& s, std::set<Theory>& out) {
  switch (s.kind()) {
    case SortKind::Bool:
      return;
    case SortKind::Int:
      out.insert(Theory::Int);
      return;
    case SortKind::Real:
      out.insert(Theory::Real);
      return;
    case SortKind::Array:
      out.insert(Theory::Array);
      sortTheories(s.index(), out);
      sortTheories(s.element(), out);
      return;
  }
}

void termTheories(const Term::Ptr& t, std::set<Theory>& out) {
  if (!t) return;
  sortTheories(t->sort(), out);
  if (t->kind() == TermKind::App) {
    if (t->symbol() == "div" || t->symbol() == "mod") out.insert(Theory::Int);
    if (t->symbol() == "select" || t->symbol() == "store")
      out.insert(Theory::Array);
  }
  for (const auto& a : t->args()) termTheories(a, out);
}

void collectSortNames(const Term::Ptr& t, std::set<std::string>& out) {
  if (!t) return;
  out.insert(t->sort().str());
  for (const auto& a : t->args()) collectSortNames(a, out);
}

// A term is arithmetic-constant if it evaluates to a fixed number: literals
// and arithmetic over literals.
bool isConstantArith(const Term::Ptr& t) {
  switch (t->kind()) {
    case TermKind::IntLit:
    case TermKind::RealLit:
      return true;
    case TermKind::App: {
      const std::string& op = t->symbol();
      if (op != "+" && op != "-" && op != "*" && op != "div" && op != "mod")
        return false;
      return std::all_of(t->args().begin(), t->args().end(), isConstantArith);
    }
    default:
      return false;
  }
}

void checkLinearArith(const Term::Ptr& t, std::size_t clauseIdx,
                      std::vector<Diagnostic>& out) {
  if (!t) return;
  if (t->kind() == TermKind::App && t->symbol() == "*") {
    std::size_t nonConstant =
        std::count_if(t->args().begin(), t->args().end(),
                      [](const Term::Ptr& a) { return !isConstantArith(a); });
    if (nonConstant > 1) {
      out.push_back({Severity::Error,
                     "clause " + std::to_string(clauseIdx) +
                         ": non-linear multiplication (more than one "
                         "non-constant factor)",
                     {}});
    }
  }
  for (const auto& a : t->args()) checkLinearArith(a, clauseIdx, out);
}

bool isLraTsShape(const Benchmark& b) {
  if (b.decls.size() != 1 || b.clauses.size() != 3) return false;
  int facts = 0, transitions = 0, queries = 0;
  for (const auto& c : b.clauses) {
    if (!c.isLinear()) return false;
    if (c.isQuery()) {
      if (c.bodyAtoms.size() != 1) return false;
      ++queries;
    } else if (c.bodyAtoms.empty()) {
      ++facts;
    } else if (c.bodyAtoms.size() == 1) {
      ++transitions;
    }
  }
  return facts == 1 && transitions == 1 && queries == 1;
}

}  // namespace

std::set<Theory> theoryOf(const Benchmark& b) {
  std::set<Theory> out;
  for (const auto& d : b.decls)
    for (const auto& s : d.argSorts) sortTheories(s, out);
  for (const auto& c : b.clauses) {
    for (const auto& v : c.vars) sortTheories(v.sort, out);
    for (const auto& a : c.bodyAtoms) termTheories(a, out);
    termTheories(c.constraint, out);
    termTheories(c.head, out);
  }
  return out;
}

Track classifyTrack(const Benchmark& b) {
  const std::set<Theory> th = theoryOf(b);
  const bool hasInt = th.count(Theory::Int) > 0;
  const bool hasReal = th.count(Theory::Real) > 0;
  const bool hasArray = th.count(Theory::Array) > 0;
  const bool allLinear = std::all_of(b.clauses.begin(), b.clauses.end(),
                                     [](const Clause& c) { return c.isLinear(); });

  if (hasReal) {
    if (hasInt || hasArray) return Track::Unclassified;
    return isLraTsShape(b) ? Track::LraTs : Track::Unclassified;
  }
  if (hasArray) return allLinear ? Track::LiaLinArrays : Track::Unclassified;
  // Pure Int and pure Boolean benchmarks both fall under the LIA tracks.
  return allLinear ? Track::LiaLin : Track::LiaNonlin;
}

CheckReport checkFragment(const Benchmark& b) {
  CheckReport report;
  report.violations = checkWellFormed(b);

  const std::size_t queries = b.queryCount();
  if (queries == 0) {
    report.violations.push_back({Severity::Error, "no query clause", {}});
  } else if (queries > 1) {
    report.violations.push_back(
        {Severity::Error,
         "multiple queries (" + std::to_string(queries) + ")",
         {}});
  }

  const std::set<Theory> th = theoryOf(b);
  if (th.count(Theory::Int) > 0 && th.count(Theory::Real) > 0) {
    report.violations.push_back(
        {Severity::Error, "mixed Int and Real theories", {}});
  } else if (th.count(Theory::Real) > 0 && th.count(Theory::Array) > 0) {
    report.violations.push_back(
        {Severity::Error, "no track covers Real combined with arrays", {}});
  }

  for (std::size_t i = 0; i < b.clauses.size(); ++i) {
    const Clause& c = b.clauses[i];
    for (const auto& a : c.bodyAtoms)
      checkLinearArith(a, i, report.violations);
    checkLinearArith(c.constraint, i, report.violations);
    checkLinearArith(c.head, i, report.violations);
  }

  report.conformant = !hasErrors(report.violations);
  report.track = report.conformant ? classifyTrack(b) : Track::Unclassified;

  report.stats.numClauses = b.clauses.size();
  report.stats.numPredicates = b.decls.size();
  report.stats.numQueries = queries;
  for (const auto& d : b.decls)
    for (const auto& s : d.argSorts) report.stats.usedSorts.insert(s.str());
  for (const auto& c : b.clauses) {
    for (const auto& v : c.vars) report.stats.usedSorts.insert(v.sort.str());
    for (const auto& a : c.bodyAtoms) collectSortNames(a, report.stats.usedSorts);
    collectSortNames(c.constraint, report.stats.usedSorts);
    collectSortNames(c.head, report.stats.usedSorts);
  }
  return report;
}

}  // namespace chctk
