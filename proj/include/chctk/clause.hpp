#pragma once

#include <set>
#include <string>
#include <vector>

#include "chctk/term.hpp"

namespace chctk {

struct TypedVar {
  std::string name;
  Sort sort;
  bool operator==(const TypedVar& o) const {
    return name == o.name && sort == o.sort;
  }
};

/// One constrained Horn clause: forall vars. bodyAtoms /\ constraint => head.
/// The body is kept partitioned: bodyAtoms holds only uninterpreted predicate
/// applications, constraint is a single interpreted Bool term (trueTerm when
/// the clause has no theory constraint). head is a predicate application, or
/// null for the head "false" (a query).
struct Clause {
  std::vector<TypedVar> vars;
  std::vector<Term::Ptr> bodyAtoms;
  Term::Ptr constraint = Term::trueTerm();
  Term::Ptr head;  // null = false

  bool isQuery() const { return head == nullptr; }
  bool isLinear() const { return bodyAtoms.size() <= 1; }
};

bool isLinear(const Clause& clause);
bool isQuery(const Clause& clause);

/// Variables occurring in bodyAtoms, constraint, or head.
std::set<std::string> usedVars(const Clause& clause);

/// Renames quantified variables to v0, v1, ... in order of first occurrence
/// (bodyAtoms, then constraint, then head); variables never used keep their
/// declaration order and get the remaining indices. Names in `avoid` are
/// skipped when picking replacement names.
Clause renameVarsCanonically(const Clause& clause,
                             const std::set<std::string>& avoid = {});

/// Equality modulo bound-variable names.
bool alphaEqual(const Clause& a, const Clause& b);

}  // namespace chctk
