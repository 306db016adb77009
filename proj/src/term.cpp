#include "chctk/term.hpp"

namespace chctk {

Term::Ptr Term::var(std::string name, Sort sort) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Var;
  t->symbol_ = std::move(name);
  t->sort_ = std::move(sort);
  return t;
}

Term::Ptr Term::intLit(BigInt value) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::IntLit;
  t->intValue_ = std::move(value);
  t->sort_ = Sort::intSort();
  return t;
}

Term::Ptr Term::realLit(BigRat value) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::RealLit;
  t->realValue_ = std::move(value);
  t->sort_ = Sort::realSort();
  return t;
}

Term::Ptr Term::app(std::string op, std::vector<Ptr> args, Sort sort) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::App;
  t->symbol_ = std::move(op);
  t->args_ = std::move(args);
  t->sort_ = std::move(sort);
  return t;
}

Term::Ptr Term::predApp(std::string pred, std::vector<Ptr> args) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::PredApp;
  t->symbol_ = std::move(pred);
  t->args_ = std::move(args);
  t->sort_ = Sort::boolSort();
  return t;
}

Term::Ptr Term::trueTerm() {
  static const Ptr t = app("true", {}, Sort::boolSort());
  return t;
}

Term::Ptr Term::falseTerm() {
  static const Ptr t = app("false", {}, Sort::boolSort());
  return t;
}

void collectFreeVars(const Term::Ptr& term, std::set<std::string>& out) {
  if (!term) return;
  if (term->isVar()) {
    out.insert(term->symbol());
    return;
  }
  for (const auto& a : term->args()) collectFreeVars(a, out);
}

std::set<std::string> freeVars(const Term::Ptr& term) {
  std::set<std::string> out;
  collectFreeVars(term, out);
  return out;
}

bool containsPredApp(const Term::Ptr& term) {
  if (!term) return false;
  if (term->isPredApp()) return true;
  for (const auto& a : term->args())
    if (containsPredApp(a)) return true;
  return false;
}

bool structEqual(const Term::Ptr& a, const Term::Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var:
      return a->symbol() == b->symbol() && a->sort() == b->sort();
    case TermKind::IntLit:
      return a->intValue() == b->intValue();
    case TermKind::RealLit:
      return a->realValue() == b->realValue();
    case TermKind::App:
    case TermKind::PredApp: {
      if (a->symbol() != b->symbol()) return false;
      if (a->args().size() != b->args().size()) return false;
      for (size_t i = 0; i < a->args().size(); ++i)
        if (!structEqual(a->args()[i], b->args()[i])) return false;
      return true;
    }
  }
  return false;
}

Term::Ptr renameVars(const Term::Ptr& term,
                     const std::map<std::string, std::string>& renaming) {
  if (!term) return term;
  switch (term->kind()) {
    case TermKind::Var: {
      auto it = renaming.find(term->symbol());
      if (it == renaming.end()) return term;
      return Term::var(it->second, term->sort());
    }
    case TermKind::IntLit:
    case TermKind::RealLit:
      return term;
    case TermKind::App:
    case TermKind::PredApp: {
      std::vector<Term::Ptr> args;
      args.reserve(term->args().size());
      bool changed = false;
      for (const auto& a : term->args()) {
        auto r = renameVars(a, renaming);
        changed = changed || r != a;
        args.push_back(std::move(r));
      }
      if (!changed) return term;
      if (term->kind() == TermKind::PredApp)
        return Term::predApp(term->symbol(), std::move(args));
      return Term::app(term->symbol(), std::move(args), term->sort());
    }
  }
  return term;
}

}  // namespace chctk
