#include "chctk/clause.hpp"

#include <map>

namespace chctk {

bool isLinear(const Clause& clause) { return clause.isLinear(); }
bool isQuery(const Clause& clause) { return clause.isQuery(); }

std::set<std::string> usedVars(const Clause& clause) {
  std::set<std::string> out;
  for (const auto& a : clause.bodyAtoms) collectFreeVars(a, out);
  collectFreeVars(clause.constraint, out);
  collectFreeVars(clause.head, out);
  return out;
}

namespace {

void noteOccurrences(const Term::Ptr& t, std::vector<std::string>& order,
                     std::set<std::string>& seen) {
  if (!t) return;
  if (t->isVar()) {
    if (seen.insert(t->symbol()).second) order.push_back(t->symbol());
    return;
  }
  for (const auto& a : t->args()) noteOccurrences(a, order, seen);
}

}  // namespace

Clause renameVarsCanonically(const Clause& clause,
                             const std::set<std::string>& avoid) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& a : clause.bodyAtoms) noteOccurrences(a, order, seen);
  noteOccurrences(clause.constraint, order, seen);
  noteOccurrences(clause.head, order, seen);
  for (const auto& v : clause.vars)
    if (seen.insert(v.name).second) order.push_back(v.name);

  std::map<std::string, std::string> renaming;
  std::map<std::string, Sort> sorts;
  for (const auto& v : clause.vars) sorts.emplace(v.name, v.sort);

  size_t next = 0;
  auto freshName = [&] {
    std::string name;
    do {
      name = "v" + std::to_string(next++);
    } while (avoid.count(name) > 0);
    return name;
  };
  for (const auto& old : order) {
    if (sorts.find(old) == sorts.end()) continue;  // not a clause variable
    renaming[old] = freshName();
  }

  Clause out;
  for (const auto& old : order) {
    auto s = sorts.find(old);
    if (s == sorts.end()) continue;
    out.vars.push_back({renaming.at(old), s->second});
  }
  for (const auto& a : clause.bodyAtoms)
    out.bodyAtoms.push_back(renameVars(a, renaming));
  out.constraint = renameVars(clause.constraint, renaming);
  out.head = renameVars(clause.head, renaming);
  return out;
}

bool alphaEqual(const Clause& a, const Clause& b) {
  Clause ca = renameVarsCanonically(a);
  Clause cb = renameVarsCanonically(b);
  if (ca.vars.size() != cb.vars.size()) return false;
  for (size_t i = 0; i < ca.vars.size(); ++i)
    if (!(ca.vars[i] == cb.vars[i])) return false;
  if (ca.bodyAtoms.size() != cb.bodyAtoms.size()) return false;
  for (size_t i = 0; i < ca.bodyAtoms.size(); ++i)
    if (!structEqual(ca.bodyAtoms[i], cb.bodyAtoms[i])) return false;
  return structEqual(ca.constraint, cb.constraint) &&
         structEqual(ca.head, cb.head);
}

}  // namespace chctk
