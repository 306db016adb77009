#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "chctk/sort.hpp"

namespace chctk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class TermKind {
  Var,      // reference to a clause-quantified variable
  IntLit,   // arbitrary-precision integer numeral
  RealLit,  // exact rational (from a decimal literal)
  App,      // interpreted theory application, including true/false
  PredApp,  // uninterpreted predicate application
};

/// Immutable term tree. Nodes are shared via Ptr and never mutated after
/// construction, so terms can be shared freely across threads.
class Term {
 public:
  using Ptr = std::shared_ptr<const Term>;

  static Ptr var(std::string name, Sort sort);
  static Ptr intLit(BigInt value);
  static Ptr realLit(BigRat value);
  static Ptr app(std::string op, std::vector<Ptr> args, Sort sort);
  static Ptr predApp(std::string pred, std::vector<Ptr> args);
  static Ptr trueTerm();
  static Ptr falseTerm();

  TermKind kind() const { return kind_; }
  /// Variable name, operator symbol, or predicate name.
  const std::string& symbol() const { return symbol_; }
  const BigInt& intValue() const { return intValue_; }
  const BigRat& realValue() const { return realValue_; }
  const std::vector<Ptr>& args() const { return args_; }
  const Sort& sort() const { return sort_; }

  bool isVar() const { return kind_ == TermKind::Var; }
  bool isPredApp() const { return kind_ == TermKind::PredApp; }
  bool isTrue() const { return kind_ == TermKind::App && symbol_ == "true"; }
  bool isFalse() const { return kind_ == TermKind::App && symbol_ == "false"; }

 private:
  Term() = default;

  TermKind kind_ = TermKind::App;
  std::string symbol_;
  BigInt intValue_;
  BigRat realValue_;
  std::vector<Ptr> args_;
  Sort sort_;
};

/// Names of all variables occurring in the term (duplicates collapse).
std::set<std::string> freeVars(const Term::Ptr& term);
void collectFreeVars(const Term::Ptr& term, std::set<std::string>& out);

/// True iff an uninterpreted predicate application occurs anywhere in term.
bool containsPredApp(const Term::Ptr& term);

/// Structural equality including variable names and sorts.
bool structEqual(const Term::Ptr& a, const Term::Ptr& b);

/// Returns term with every variable renamed per the map (missing names are
/// kept). Sorts are unchanged.
Term::Ptr renameVars(const Term::Ptr& term,
                     const std::map<std::string, std::string>& renaming);

}  // namespace chctk
