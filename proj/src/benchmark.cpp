#include "chctk/benchmark.hpp"

#include <algorithm>
#include <map>

namespace chctk {

const PredicateDecl* Benchmark::findDecl(std::string_view name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

std::size_t Benchmark::queryCount() const {
  return static_cast<std::size_t>(
      std::count_if(clauses.begin(), clauses.end(),
                    [](const Clause& c) { return c.isQuery(); }));
}

namespace {

void err(std::vector<Diagnostic>& out, std::string msg) {
  out.push_back({Severity::Error, std::move(msg), {}});
}

void checkAtomAgainstDecl(const Benchmark& b, const Term::Ptr& atom,
                          size_t clauseIdx, std::vector<Diagnostic>& out) {
  const PredicateDecl* decl = b.findDecl(atom->symbol());
  if (decl == nullptr) {
    err(out, "clause " + std::to_string(clauseIdx) + ": undeclared predicate '" +
                 atom->symbol() + "'");
    return;
  }
  if (decl->argSorts.size() != atom->args().size()) {
    err(out, "clause " + std::to_string(clauseIdx) + ": predicate '" +
                 atom->symbol() + "' expects " +
                 std::to_string(decl->argSorts.size()) + " argument(s), got " +
                 std::to_string(atom->args().size()));
    return;
  }
  for (size_t i = 0; i < atom->args().size(); ++i) {
    if (atom->args()[i]->sort() != decl->argSorts[i]) {
      err(out, "clause " + std::to_string(clauseIdx) + ": argument " +
                   std::to_string(i + 1) + " of '" + atom->symbol() +
                   "' has sort " + atom->args()[i]->sort().str() +
                   ", expected " + decl->argSorts[i].str());
    }
  }
  for (const auto& arg : atom->args()) {
    if (containsPredApp(arg)) {
      err(out, "clause " + std::to_string(clauseIdx) +
                   ": predicate application nested inside arguments of '" +
                   atom->symbol() + "'");
    }
  }
}

}  // namespace

std::vector<Diagnostic> checkWellFormed(const Benchmark& b) {
  std::vector<Diagnostic> out;

  std::map<std::string, int> declCount;
  for (const auto& d : b.decls) declCount[d.name]++;
  for (const auto& [name, n] : declCount) {
    if (n > 1)
      err(out, "predicate '" + name + "' declared " + std::to_string(n) +
                   " times");
  }

  for (size_t ci = 0; ci < b.clauses.size(); ++ci) {
    const Clause& c = b.clauses[ci];
    const std::string where = "clause " + std::to_string(ci);

    std::map<std::string, Sort> varSorts;
    for (const auto& v : c.vars) {
      if (!varSorts.emplace(v.name, v.sort).second)
        err(out, where + ": duplicate bound variable '" + v.name + "'");
    }

    for (const auto& atom : c.bodyAtoms) {
      if (!atom || !atom->isPredApp()) {
        err(out, where + ": body atom is not a predicate application");
        continue;
      }
      checkAtomAgainstDecl(b, atom, ci, out);
    }

    if (!c.constraint) {
      err(out, where + ": missing constraint term");
    } else {
      if (containsPredApp(c.constraint))
        err(out, where + ": predicate application inside the constraint");
      if (!c.constraint->sort().isBool())
        err(out, where + ": constraint is not Bool-sorted");
    }

    if (c.head) {
      if (!c.head->isPredApp())
        err(out, where + ": head is neither a predicate application nor false");
      else
        checkAtomAgainstDecl(b, c.head, ci, out);
    }

    for (const auto& name : usedVars(c)) {
      if (varSorts.find(name) == varSorts.end())
        err(out, where + ": unbound variable '" + name + "'");
    }
  }

  return out;
}

bool alphaEqual(const Benchmark& a, const Benchmark& b) {
  if (a.logicName != b.logicName) return false;
  if (a.decls != b.decls) return false;
  if (a.clauses.size() != b.clauses.size()) return false;
  for (size_t i = 0; i < a.clauses.size(); ++i)
    if (!alphaEqual(a.clauses[i], b.clauses[i])) return false;
  return true;
}

}  // namespace chctk
