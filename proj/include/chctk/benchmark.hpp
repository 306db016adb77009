#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chctk/clause.hpp"
#include "chctk/diagnostic.hpp"
#include "chctk/digest.hpp"

namespace chctk {

/// Declaration of an uninterpreted predicate. The result sort is always Bool.
struct PredicateDecl {
  std::string name;
  std::vector<Sort> argSorts;
  bool isNullary() const { return argSorts.empty(); }
  bool operator==(const PredicateDecl& o) const {
    return name == o.name && argSorts == o.argSorts;
  }
};

/// A parsed CHC script: predicate declarations plus clauses, tagged with the
/// originating repository/path and, once computed, a canonical checksum.
struct Benchmark {
  std::string logicName = "HORN";
  std::vector<PredicateDecl> decls;
  std::vector<Clause> clauses;
  std::string origin;
  std::optional<Digest> checksum;

  const PredicateDecl* findDecl(std::string_view name) const;
  std::size_t queryCount() const;
};

/// Total well-formedness check: every predicate used is declared exactly
/// once, applications match declared arities and argument sorts, clause
/// variables cover all occurring variables, bodies are properly partitioned.
/// Returns one diagnostic per violation; empty means well-formed.
std::vector<Diagnostic> checkWellFormed(const Benchmark& benchmark);

/// Equality modulo bound-variable names. Origin and checksum are not
/// compared; logic, declarations, and clause order are.
bool alphaEqual(const Benchmark& a, const Benchmark& b);

}  // namespace chctk
