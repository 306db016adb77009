#include "chctk/parser.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <utility>

#include "chctk/lexer.hpp"

namespace chctk {

namespace {

constexpr int kMaxNestingDepth = 512;

// ---------------------------------------------------------------------------
// S-expression layer

struct SExpr {
  bool list = false;
  Token atom;                // valid when !list
  std::vector<SExpr> items;  // valid when list
  SourcePos pos;

  bool isSymbol() const { return !list && atom.kind == TokenKind::Symbol; }
  bool isSymbol(std::string_view s) const {
    return isSymbol() && atom.text == s;
  }
  const std::string& text() const { return atom.text; }
};

class Reader {
 public:
  Reader(std::string_view src, std::vector<Diagnostic>& diags)
      : lexer_(src), diags_(diags) {
    look_ = lexer_.next();
  }

  // Top-level s-expressions until EOF.
  std::vector<SExpr> readAll() {
    std::vector<SExpr> out;
    while (look_.kind != TokenKind::End) {
      if (look_.kind == TokenKind::RParen) {
        error(look_.pos, "unbalanced ')'");
        bump();
        continue;
      }
      if (auto e = read(0)) out.push_back(std::move(*e));
    }
    for (const auto& d : lexer_.diagnostics()) diags_.push_back(d);
    return out;
  }

 private:
  std::optional<SExpr> read(int depth) {
    if (depth > kMaxNestingDepth) {
      error(look_.pos, "expression nesting exceeds depth limit");
      skipBalanced();
      return std::nullopt;
    }
    Token t = bump();
    if (t.kind != TokenKind::LParen) {
      SExpr e;
      e.atom = t;
      e.pos = t.pos;
      return e;
    }
    SExpr e;
    e.list = true;
    e.pos = t.pos;
    while (true) {
      if (look_.kind == TokenKind::End) {
        error(t.pos, "unbalanced '(': unclosed expression");
        return e;
      }
      if (look_.kind == TokenKind::RParen) {
        bump();
        return e;
      }
      if (auto item = read(depth + 1)) e.items.push_back(std::move(*item));
    }
  }

  // After a depth-limit error, consume tokens until the enclosing list's
  // parens balance out again.
  void skipBalanced() {
    int depth = 0;
    while (look_.kind != TokenKind::End) {
      if (look_.kind == TokenKind::LParen) ++depth;
      if (look_.kind == TokenKind::RParen) {
        if (depth == 0) return;
        --depth;
      }
      bump();
    }
  }

  Token bump() {
    Token t = look_;
    look_ = lexer_.next();
    return t;
  }

  void error(SourcePos pos, std::string msg) {
    diags_.push_back({Severity::Error, std::move(msg), pos});
  }

  Lexer lexer_;
  std::vector<Diagnostic>& diags_;
  Token look_;
};

// ---------------------------------------------------------------------------
// Theory signature

enum class OpArity { Exactly, AtLeast };

struct OpSig {
  OpArity arityKind;
  std::size_t arity;
};

const std::map<std::string_view, OpSig>& opTable() {
  static const std::map<std::string_view, OpSig> table = {
      {"true", {OpArity::Exactly, 0}},  {"false", {OpArity::Exactly, 0}},
      {"not", {OpArity::Exactly, 1}},   {"and", {OpArity::AtLeast, 2}},
      {"or", {OpArity::AtLeast, 2}},    {"=>", {OpArity::AtLeast, 2}},
      {"ite", {OpArity::Exactly, 3}},   {"=", {OpArity::AtLeast, 2}},
      {"<=", {OpArity::AtLeast, 2}},    {"<", {OpArity::AtLeast, 2}},
      {">=", {OpArity::AtLeast, 2}},    {">", {OpArity::AtLeast, 2}},
      {"+", {OpArity::AtLeast, 2}},     {"*", {OpArity::AtLeast, 2}},
      {"-", {OpArity::AtLeast, 1}},     {"div", {OpArity::Exactly, 2}},
      {"mod", {OpArity::Exactly, 2}},   {"select", {OpArity::Exactly, 2}},
      {"store", {OpArity::Exactly, 3}},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Parser proper

struct Env {
  std::map<std::string, Term::Ptr> lets;
  std::map<std::string, Sort> vars;
};

class Parser {
 public:
  Parser(std::string_view source, std::string origin) : source_(source) {
    bench_.origin = std::move(origin);
  }

  ParseResult run() {
    Reader reader(source_, diags_);
    auto commands = reader.readAll();
    for (const auto& cmd : commands) command(cmd);
    if (!sawCheckSat_)
      diags_.push_back({Severity::Warning, "missing (check-sat)", {}});

    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!hasErrors(result.diagnostics)) result.benchmark = std::move(bench_);
    return result;
  }

 private:
  void error(SourcePos pos, std::string msg) {
    diags_.push_back({Severity::Error, std::move(msg), pos});
  }

  // -- commands -------------------------------------------------------------

  void command(const SExpr& cmd) {
    if (!cmd.list || cmd.items.empty() || !cmd.items[0].isSymbol()) {
      error(cmd.pos, "expected a command");
      return;
    }
    const std::string& name = cmd.items[0].text();
    if (sawCheckSat_ && name != "exit") {
      error(cmd.pos, "unexpected command after (check-sat)");
      return;
    }
    if (name == "set-logic") {
      if (sawDecls_ || sawAsserts_ || sawSetLogic_) {
        error(cmd.pos, "misplaced (set-logic)");
        return;
      }
      sawSetLogic_ = true;
      if (cmd.items.size() != 2 || !cmd.items[1].isSymbol()) {
        error(cmd.pos, "set-logic expects one logic name");
        return;
      }
      bench_.logicName = cmd.items[1].text();
    } else if (name == "set-info") {
      // Metadata; ignored.
    } else if (name == "declare-fun") {
      declareFun(cmd);
    } else if (name == "assert") {
      assertClause(cmd);
    } else if (name == "check-sat") {
      sawCheckSat_ = true;
    } else if (name == "exit") {
      // Ignored.
    } else {
      error(cmd.pos, "unknown command '" + name + "'");
    }
  }

  void declareFun(const SExpr& cmd) {
    sawDecls_ = true;
    if (cmd.items.size() != 4 || !cmd.items[1].isSymbol() ||
        !cmd.items[2].list) {
      error(cmd.pos, "declare-fun expects (declare-fun name (sorts) Bool)");
      return;
    }
    const std::string& name = cmd.items[1].text();
    if (isTheorySymbol(name)) {
      error(cmd.items[1].pos,
            "predicate name '" + name + "' collides with a theory symbol");
      return;
    }
    if (bench_.findDecl(name) != nullptr) {
      error(cmd.items[1].pos, "predicate '" + name + "' already declared");
      return;
    }
    PredicateDecl decl;
    decl.name = name;
    bool ok = true;
    for (const auto& s : cmd.items[2].items) {
      if (auto sort = parseSort(s)) {
        decl.argSorts.push_back(*sort);
      } else {
        ok = false;
      }
    }
    auto result = parseSort(cmd.items[3]);
    if (result && !result->isBool()) {
      error(cmd.items[3].pos,
            "result sort of '" + name + "' must be Bool, got " + result->str());
      ok = false;
    }
    if (!result) ok = false;
    if (ok) bench_.decls.push_back(std::move(decl));
  }

  std::optional<Sort> parseSort(const SExpr& e) {
    if (e.isSymbol("Bool")) return Sort::boolSort();
    if (e.isSymbol("Int")) return Sort::intSort();
    if (e.isSymbol("Real")) return Sort::realSort();
    if (e.list && e.items.size() == 3 && e.items[0].isSymbol("Array")) {
      auto index = parseSort(e.items[1]);
      auto element = parseSort(e.items[2]);
      if (index && element)
        return Sort::arraySort(std::move(*index), std::move(*element));
      return std::nullopt;
    }
    error(e.pos, "unsupported sort");
    return std::nullopt;
  }

  // -- clauses ----------------------------------------------------------------

  void assertClause(const SExpr& cmd) {
    sawAsserts_ = true;
    if (cmd.items.size() != 2) {
      error(cmd.pos, "assert expects exactly one argument");
      return;
    }
    Clause clause;
    Env env;
    if (parseClauseShape(cmd.items[1], env, clause))
      bench_.clauses.push_back(std::move(clause));
  }

  bool parseClauseShape(const SExpr& e, Env env, Clause& clause) {
    if (e.list && !e.items.empty() && e.items[0].isSymbol()) {
      const std::string& head = e.items[0].text();
      if (head == "forall") {
        if (e.items.size() != 3 || !e.items[1].list) {
          error(e.pos, "forall expects a binder list and a body");
          return false;
        }
        if (e.items[1].items.empty()) {
          error(e.items[1].pos, "empty quantifier binder list");
          return false;
        }
        for (const auto& binder : e.items[1].items) {
          if (!binder.list || binder.items.size() != 2 ||
              !binder.items[0].isSymbol()) {
            error(binder.pos, "binder must be (name sort)");
            return false;
          }
          const std::string& name = binder.items[0].text();
          if (isTheorySymbol(name)) {
            error(binder.items[0].pos,
                  "cannot bind reserved symbol '" + name + "'");
            return false;
          }
          auto sort = parseSort(binder.items[1]);
          if (!sort) return false;
          if (env.vars.count(name) ||
              std::any_of(clause.vars.begin(), clause.vars.end(),
                          [&](const TypedVar& v) { return v.name == name; })) {
            error(binder.items[0].pos,
                  "duplicate bound variable '" + name + "'");
            return false;
          }
          clause.vars.push_back({name, *sort});
          env.vars.emplace(name, *sort);
          env.lets.erase(name);  // quantifier shadows an outer let
        }
        return parseClauseShape(e.items[2], std::move(env), clause);
      }
      if (head == "let") {
        if (!parseLetBindings(e, env)) return false;
        return parseClauseShape(e.items[2], std::move(env), clause);
      }
      if (head == "!") {
        const SExpr* inner = unwrapAnnotation(e);
        if (inner == nullptr) return false;
        return parseClauseShape(*inner, std::move(env), clause);
      }
      if (head == "exists") {
        error(e.pos, "existential quantification is not allowed in the fragment");
        return false;
      }
      if (head == "not") {
        error(e.pos,
              "not-based clause encoding is not accepted; run the normalizer "
              "first");
        return false;
      }
      if (head == "=>") {
        if (e.items.size() != 3) {
          error(e.pos, "clause implication must have exactly two operands");
          return false;
        }
        if (!parseClauseBody(e.items[1], env, clause)) return false;
        return parseClauseHead(e.items[2], env, clause);
      }
    }
    // Bare atom: a fact with empty body.
    Term::Ptr t = parseTerm(e, env);
    if (!t) return false;
    if (!t->isPredApp()) {
      error(e.pos, "clause must be an implication or a predicate atom");
      return false;
    }
    if (!checkAtomArgs(t, e.pos)) return false;
    clause.head = std::move(t);
    return true;
  }

  // Parallel-let semantics: all right-hand sides are evaluated in the outer
  // environment, then bound at once.
  bool parseLetBindings(const SExpr& e, Env& env) {
    if (e.items.size() != 3 || !e.items[1].list) {
      error(e.pos, "let expects a binding list and a body");
      return false;
    }
    std::vector<std::pair<std::string, Term::Ptr>> bindings;
    for (const auto& binding : e.items[1].items) {
      if (!binding.list || binding.items.size() != 2 ||
          !binding.items[0].isSymbol()) {
        error(binding.pos, "let binding must be (name term)");
        return false;
      }
      Term::Ptr value = parseTerm(binding.items[1], env);
      if (!value) return false;
      bindings.emplace_back(binding.items[0].text(), std::move(value));
    }
    for (auto& [name, value] : bindings) {
      env.vars.erase(name);
      env.lets[name] = std::move(value);
    }
    return true;
  }

  // (! term :named sym) -> term; any other attribute is rejected.
  const SExpr* unwrapAnnotation(const SExpr& e) {
    if (e.items.size() < 2) {
      error(e.pos, "malformed annotation");
      return nullptr;
    }
    for (std::size_t i = 2; i < e.items.size(); i += 2) {
      const SExpr& kw = e.items[i];
      if (kw.list || kw.atom.kind != TokenKind::Keyword) {
        error(kw.pos, "malformed annotation");
        return nullptr;
      }
      if (kw.text() != "named") {
        error(kw.pos, "unsupported attribute :" + kw.text());
        return nullptr;
      }
      if (i + 1 >= e.items.size()) {
        error(kw.pos, "attribute :named expects a value");
        return nullptr;
      }
    }
    return &e.items[1];
  }

  bool parseClauseBody(const SExpr& e, const Env& env, Clause& clause) {
    Term::Ptr body = parseTerm(e, env);
    if (!body) return false;
    if (!body->sort().isBool()) {
      error(e.pos, "sort mismatch: clause body must be Bool");
      return false;
    }
    std::vector<Term::Ptr> conjuncts;
    flattenAnd(body, conjuncts);
    std::vector<Term::Ptr> constraintParts;
    for (auto& c : conjuncts) {
      if (c->isPredApp()) {
        if (!checkAtomArgs(c, e.pos)) return false;
        clause.bodyAtoms.push_back(std::move(c));
      } else {
        if (containsPredApp(c)) {
          error(e.pos,
                "predicate application nested inside an interpreted term");
          return false;
        }
        if (!c->isTrue()) constraintParts.push_back(std::move(c));
      }
    }
    if (constraintParts.empty()) {
      clause.constraint = Term::trueTerm();
    } else if (constraintParts.size() == 1) {
      clause.constraint = std::move(constraintParts[0]);
    } else {
      clause.constraint =
          Term::app("and", std::move(constraintParts), Sort::boolSort());
    }
    return true;
  }

  bool parseClauseHead(const SExpr& e, const Env& env, Clause& clause) {
    Term::Ptr head = parseTerm(e, env);
    if (!head) return false;
    if (head->isFalse()) {
      clause.head = nullptr;
      return true;
    }
    if (!head->isPredApp()) {
      error(e.pos, "head is neither a predicate atom nor false");
      return false;
    }
    if (!checkAtomArgs(head, e.pos)) return false;
    clause.head = std::move(head);
    return true;
  }

  bool checkAtomArgs(const Term::Ptr& atom, SourcePos pos) {
    for (const auto& arg : atom->args()) {
      if (containsPredApp(arg)) {
        error(pos, "predicate application nested inside an interpreted term");
        return false;
      }
    }
    return true;
  }

  static void flattenAnd(const Term::Ptr& t, std::vector<Term::Ptr>& out) {
    if (t->kind() == TermKind::App && t->symbol() == "and") {
      for (const auto& a : t->args()) flattenAnd(a, out);
      return;
    }
    out.push_back(t);
  }

  // -- terms ------------------------------------------------------------------

  Term::Ptr parseTerm(const SExpr& e, const Env& env) {
    if (!e.list) return parseAtom(e, env);
    if (e.items.empty()) {
      error(e.pos, "empty expression");
      return nullptr;
    }
    if (!e.items[0].isSymbol()) {
      error(e.items[0].pos, "expression head must be a symbol");
      return nullptr;
    }
    const std::string& head = e.items[0].text();
    if (head == "let") {
      Env inner = env;
      if (!parseLetBindings(e, inner)) return nullptr;
      return parseTerm(e.items[2], inner);
    }
    if (head == "!") {
      const SExpr* body = unwrapAnnotation(e);
      if (body == nullptr) return nullptr;
      return parseTerm(*body, env);
    }
    if (head == "exists") {
      error(e.pos, "existential quantification is not allowed in the fragment");
      return nullptr;
    }
    if (head == "forall") {
      error(e.pos, "nested quantifier inside a term is not supported");
      return nullptr;
    }

    std::vector<Term::Ptr> args;
    args.reserve(e.items.size() - 1);
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      Term::Ptr a = parseTerm(e.items[i], env);
      if (!a) return nullptr;
      args.push_back(std::move(a));
    }

    auto op = opTable().find(head);
    if (op != opTable().end())
      return applyOp(head, op->second, std::move(args), e.pos);

    if (const PredicateDecl* decl = bench_.findDecl(head))
      return applyPredicate(*decl, std::move(args), e.pos);

    error(e.items[0].pos, "undeclared predicate '" + head + "'");
    return nullptr;
  }

  // cpp_int's string constructor treats a leading 0 as an octal prefix.
  static BigInt decimalDigitsToInt(std::string digits) {
    std::size_t firstNonZero = digits.find_first_not_of('0');
    if (firstNonZero == std::string::npos) return BigInt(0);
    return BigInt(digits.substr(firstNonZero));
  }

  Term::Ptr parseAtom(const SExpr& e, const Env& env) {
    switch (e.atom.kind) {
      case TokenKind::Numeral:
        return Term::intLit(decimalDigitsToInt(e.text()));
      case TokenKind::Decimal: {
        auto dot = e.text().find('.');
        std::string digits = e.text().substr(0, dot) + e.text().substr(dot + 1);
        std::size_t frac = e.text().size() - dot - 1;
        BigInt num = decimalDigitsToInt(digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        return Term::realLit(BigRat(num, den));
      }
      case TokenKind::String:
        error(e.pos, "unexpected string literal");
        return nullptr;
      case TokenKind::Keyword:
        error(e.pos, "unexpected keyword :" + e.text());
        return nullptr;
      case TokenKind::Symbol:
        break;
      default:
        error(e.pos, "unexpected token");
        return nullptr;
    }

    const std::string& name = e.text();
    if (auto it = env.lets.find(name); it != env.lets.end()) return it->second;
    if (auto it = env.vars.find(name); it != env.vars.end())
      return Term::var(name, it->second);
    if (name == "true") return Term::trueTerm();
    if (name == "false") return Term::falseTerm();
    if (const PredicateDecl* decl = bench_.findDecl(name)) {
      if (!decl->isNullary()) {
        error(e.pos, "predicate '" + name + "' expects " +
                         std::to_string(decl->argSorts.size()) +
                         " argument(s), got 0");
        return nullptr;
      }
      return Term::predApp(name, {});
    }
    error(e.pos, "unbound variable '" + name + "'");
    return nullptr;
  }

  Term::Ptr applyPredicate(const PredicateDecl& decl,
                           std::vector<Term::Ptr> args, SourcePos pos) {
    if (args.size() != decl.argSorts.size()) {
      error(pos, "predicate '" + decl.name + "' expects " +
                     std::to_string(decl.argSorts.size()) +
                     " argument(s), got " + std::to_string(args.size()));
      return nullptr;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      Term::Ptr coerced = coerceTo(args[i], decl.argSorts[i]);
      if (!coerced) {
        error(pos, "sort mismatch: argument " + std::to_string(i + 1) +
                       " of '" + decl.name + "' has sort " +
                       args[i]->sort().str() + ", expected " +
                       decl.argSorts[i].str());
        return nullptr;
      }
      args[i] = std::move(coerced);
    }
    return Term::predApp(decl.name, std::move(args));
  }

  // -- theory operator application with sort checking ------------------------

  // Int literals (and +,-,* trees of them) are transparently re-typed as Real
  // in Real contexts, the way SMT-LIB numerals behave in LRA scripts.
  static Term::Ptr tryCoerceToReal(const Term::Ptr& t) {
    if (t->sort().isReal()) return t;
    if (t->kind() == TermKind::IntLit)
      return Term::realLit(BigRat(t->intValue()));
    if (t->kind() == TermKind::App &&
        (t->symbol() == "+" || t->symbol() == "-" || t->symbol() == "*")) {
      std::vector<Term::Ptr> args;
      for (const auto& a : t->args()) {
        Term::Ptr c = tryCoerceToReal(a);
        if (!c) return nullptr;
        args.push_back(std::move(c));
      }
      return Term::app(t->symbol(), std::move(args), Sort::realSort());
    }
    return nullptr;
  }

  static Term::Ptr coerceTo(const Term::Ptr& t, const Sort& target) {
    if (t->sort() == target) return t;
    if (target.isReal()) return tryCoerceToReal(t);
    return nullptr;
  }

  // Unifies numeric operands: all Int, all Real, or Int literals coerced to
  // Real. Returns the common sort, or nullopt after reporting.
  std::optional<Sort> unifyNumeric(const std::string& op,
                                   std::vector<Term::Ptr>& args,
                                   SourcePos pos) {
    bool anyReal = false;
    bool allNumeric = true;
    for (const auto& a : args) {
      if (!a->sort().isNumeric()) allNumeric = false;
      if (a->sort().isReal()) anyReal = true;
    }
    if (!allNumeric) {
      error(pos, "sort mismatch: operator '" + op +
                     "' expects numeric operands");
      return std::nullopt;
    }
    if (!anyReal) return Sort::intSort();
    for (auto& a : args) {
      Term::Ptr c = tryCoerceToReal(a);
      if (!c) {
        error(pos, "sort mismatch: operator '" + op +
                       "' mixes Int and Real operands");
        return std::nullopt;
      }
      a = std::move(c);
    }
    return Sort::realSort();
  }

  bool requireBool(const std::string& op, const std::vector<Term::Ptr>& args,
                   SourcePos pos) {
    for (const auto& a : args) {
      if (!a->sort().isBool()) {
        error(pos,
              "sort mismatch: operator '" + op + "' expects Bool operands");
        return false;
      }
    }
    return true;
  }

  Term::Ptr applyOp(const std::string& op, const OpSig& sig,
                    std::vector<Term::Ptr> args, SourcePos pos) {
    bool arityOk = sig.arityKind == OpArity::Exactly
                       ? args.size() == sig.arity
                       : args.size() >= sig.arity;
    if (!arityOk) {
      error(pos, "operator '" + op + "' applied to " +
                     std::to_string(args.size()) + " argument(s)");
      return nullptr;
    }

    if (op == "true") return Term::trueTerm();
    if (op == "false") return Term::falseTerm();

    if (op == "and" || op == "or" || op == "=>" || op == "not") {
      if (!requireBool(op, args, pos)) return nullptr;
      return Term::app(op, std::move(args), Sort::boolSort());
    }
    if (op == "ite") {
      if (!args[0]->sort().isBool()) {
        error(pos, "sort mismatch: ite condition must be Bool");
        return nullptr;
      }
      std::vector<Term::Ptr> branches = {args[1], args[2]};
      Sort branchSort = branches[0]->sort();
      if (branches[0]->sort() != branches[1]->sort()) {
        if (branches[0]->sort().isNumeric() &&
            branches[1]->sort().isNumeric()) {
          auto unified = unifyNumeric(op, branches, pos);
          if (!unified) return nullptr;
          branchSort = *unified;
        } else {
          error(pos, "sort mismatch: ite branches differ");
          return nullptr;
        }
      }
      return Term::app(
          op, {args[0], std::move(branches[0]), std::move(branches[1])},
          branchSort);
    }
    if (op == "=") {
      bool numeric = true;
      for (const auto& a : args)
        if (!a->sort().isNumeric()) numeric = false;
      if (numeric) {
        if (!unifyNumeric(op, args, pos)) return nullptr;
      } else {
        for (std::size_t i = 1; i < args.size(); ++i) {
          if (args[i]->sort() != args[0]->sort()) {
            error(pos, "sort mismatch: '=' operands have different sorts");
            return nullptr;
          }
        }
      }
      return Term::app(op, std::move(args), Sort::boolSort());
    }
    if (op == "<=" || op == "<" || op == ">=" || op == ">") {
      if (!unifyNumeric(op, args, pos)) return nullptr;
      return Term::app(op, std::move(args), Sort::boolSort());
    }
    if (op == "+" || op == "*" || op == "-") {
      auto sort = unifyNumeric(op, args, pos);
      if (!sort) return nullptr;
      return Term::app(op, std::move(args), *sort);
    }
    if (op == "div" || op == "mod") {
      for (const auto& a : args) {
        if (!a->sort().isInt()) {
          error(pos,
                "sort mismatch: operator '" + op + "' expects Int operands");
          return nullptr;
        }
      }
      return Term::app(op, std::move(args), Sort::intSort());
    }
    if (op == "select") {
      if (!args[0]->sort().isArray()) {
        error(pos, "sort mismatch: select expects an array");
        return nullptr;
      }
      const Sort arr = args[0]->sort();
      Term::Ptr index = coerceTo(args[1], arr.index());
      if (!index) {
        error(pos, "sort mismatch: select index has sort " +
                       args[1]->sort().str() + ", expected " +
                       arr.index().str());
        return nullptr;
      }
      return Term::app(op, {args[0], std::move(index)}, arr.element());
    }
    if (op == "store") {
      if (!args[0]->sort().isArray()) {
        error(pos, "sort mismatch: store expects an array");
        return nullptr;
      }
      const Sort arr = args[0]->sort();
      Term::Ptr index = coerceTo(args[1], arr.index());
      Term::Ptr value = coerceTo(args[2], arr.element());
      if (!index || !value) {
        error(pos, "sort mismatch: store arguments do not match " + arr.str());
        return nullptr;
      }
      return Term::app(op, {args[0], std::move(index), std::move(value)}, arr);
    }

    error(pos, "unknown operator '" + op + "'");
    return nullptr;
  }

  std::string_view source_;
  Benchmark bench_;
  std::vector<Diagnostic> diags_;
  bool sawSetLogic_ = false;
  bool sawDecls_ = false;
  bool sawAsserts_ = false;
  bool sawCheckSat_ = false;
};

}  // namespace

bool isTheorySymbol(std::string_view name) {
  return opTable().find(name) != opTable().end();
}

ParseResult parseBenchmark(std::string_view source, std::string origin) {
  Parser parser(source, std::move(origin));
  return parser.run();
}

}  // namespace chctk
