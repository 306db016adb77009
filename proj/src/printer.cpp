#include "chctk/printer.hpp"

#include <set>
#include <sstream>

#include "chctk/lexer.hpp"

namespace chctk {

namespace {

std::string symbolText(const std::string& name) {
  if (isSimpleSymbol(name)) return name;
  return "|" + name + "|";
}

void renderIntValue(const BigInt& v, std::ostream& out) {
  if (v < 0) {
    out << "(- " << BigInt(-v).str() << ")";
  } else {
    out << v.str();
  }
}

// Rationals produced by the parser come from decimal literals, so the
// reduced denominator is always of the form 2^a * 5^b and the value has a
// finite decimal rendering. Anything else falls back to (/ p q), which is
// outside the accepted input fragment.
void renderRealValue(const BigRat& v, std::ostream& out) {
  if (v < 0) {
    out << "(- ";
    renderRealValue(BigRat(-v), out);
    out << ")";
    return;
  }
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  unsigned twos = 0;
  unsigned fives = 0;
  BigInt d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    out << "(/ " << num.str() << " " << den.str() << ")";
    return;
  }
  unsigned k = std::max(twos, fives);
  BigInt scaled = num;
  for (unsigned i = twos; i < k; ++i) scaled *= 2;
  for (unsigned i = fives; i < k; ++i) scaled *= 5;
  std::string digits = scaled.str();
  if (k == 0) {
    out << digits << ".0";
    return;
  }
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  out << digits;
}

void renderTerm(const Term::Ptr& t, std::ostream& out) {
  switch (t->kind()) {
    case TermKind::Var:
      out << symbolText(t->symbol());
      return;
    case TermKind::IntLit:
      renderIntValue(t->intValue(), out);
      return;
    case TermKind::RealLit:
      renderRealValue(t->realValue(), out);
      return;
    case TermKind::App:
    case TermKind::PredApp: {
      const std::string sym = t->kind() == TermKind::PredApp
                                  ? symbolText(t->symbol())
                                  : t->symbol();
      if (t->args().empty()) {
        out << sym;
        return;
      }
      out << "(" << sym;
      for (const auto& a : t->args()) {
        out << " ";
        renderTerm(a, out);
      }
      out << ")";
      return;
    }
  }
}

void renderClause(const Clause& c, std::ostream& out) {
  std::ostringstream core;
  std::vector<Term::Ptr> conjuncts = c.bodyAtoms;
  if (!c.constraint->isTrue()) conjuncts.push_back(c.constraint);

  const bool fact = conjuncts.empty() && c.head != nullptr;
  if (fact) {
    renderTerm(c.head, core);
  } else {
    core << "(=> ";
    if (conjuncts.empty()) {
      core << "true";
    } else if (conjuncts.size() == 1) {
      renderTerm(conjuncts[0], core);
    } else {
      core << "(and";
      for (const auto& t : conjuncts) {
        core << " ";
        renderTerm(t, core);
      }
      core << ")";
    }
    core << " ";
    if (c.head) {
      renderTerm(c.head, core);
    } else {
      core << "false";
    }
    core << ")";
  }

  out << "(assert ";
  if (!c.vars.empty()) {
    out << "(forall (";
    for (size_t i = 0; i < c.vars.size(); ++i) {
      if (i > 0) out << " ";
      out << "(" << symbolText(c.vars[i].name) << " " << c.vars[i].sort.str()
          << ")";
    }
    out << ") " << core.str() << ")";
  } else {
    out << core.str();
  }
  out << ")";
}

}  // namespace

std::string printTerm(const Term::Ptr& term) {
  if (!term) return "false";
  std::ostringstream out;
  renderTerm(term, out);
  return out.str();
}

std::string printClause(const Clause& clause) {
  std::ostringstream out;
  renderClause(clause, out);
  return out.str();
}

std::string printCanonical(const Benchmark& b) {
  std::ostringstream out;
  out << "(set-logic " << symbolText(b.logicName) << ")\n";

  std::set<std::string> predicateNames;
  for (const auto& d : b.decls) predicateNames.insert(d.name);

  for (const auto& d : b.decls) {
    out << "(declare-fun " << symbolText(d.name) << " (";
    for (size_t i = 0; i < d.argSorts.size(); ++i) {
      if (i > 0) out << " ";
      out << d.argSorts[i].str();
    }
    out << ") Bool)\n";
  }
  for (const auto& c : b.clauses) {
    renderClause(renameVarsCanonically(c, predicateNames), out);
    out << "\n";
  }
  out << "(check-sat)\n";
  return out.str();
}

}  // namespace chctk
