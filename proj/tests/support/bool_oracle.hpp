// Independent semantics oracle used by the transform tests: least-fixpoint
// derivability for ground Boolean CHC systems (nullary predicates, constant
// constraints). Deliberately unrelated to the library's transform code paths.
#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "chctk/benchmark.hpp"

namespace chctk::testsupport {

// Evaluates a ground Boolean term (no variables, no predicates).
inline bool evalGroundBool(const Term::Ptr& t) {
  if (t->isTrue()) return true;
  if (t->isFalse()) return false;
  const auto& args = t->args();
  if (t->symbol() == "not") return !evalGroundBool(args[0]);
  if (t->symbol() == "and") {
    for (const auto& a : args)
      if (!evalGroundBool(a)) return false;
    return true;
  }
  if (t->symbol() == "or") {
    for (const auto& a : args)
      if (evalGroundBool(a)) return true;
    return false;
  }
  if (t->symbol() == "=>") {
    bool acc = evalGroundBool(args.back());
    for (std::size_t i = args.size() - 1; i-- > 0;)
      acc = !evalGroundBool(args[i]) || acc;
    return acc;
  }
  if (t->symbol() == "=") {
    bool first = evalGroundBool(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i)
      if (evalGroundBool(args[i]) != first) return false;
    return true;
  }
  if (t->symbol() == "ite")
    return evalGroundBool(args[0]) ? evalGroundBool(args[1])
                                   : evalGroundBool(args[2]);
  throw std::runtime_error("oracle: non-Boolean ground term " + t->symbol());
}

// True iff `false` is derivable, i.e. the benchmark is unsat. Bottom-up
// iteration to a fixpoint over the set of derivable nullary predicates.
inline bool derivableFalse(const Benchmark& b) {
  std::set<std::string> derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : b.clauses) {
      if (!c.constraint->isTrue() && !evalGroundBool(c.constraint)) continue;
      bool bodyHolds = true;
      for (const auto& atom : c.bodyAtoms) {
        if (derived.count(atom->symbol()) == 0) {
          bodyHolds = false;
          break;
        }
      }
      if (!bodyHolds) continue;
      if (c.isQuery()) return true;
      if (derived.insert(c.head->symbol()).second) changed = true;
    }
  }
  return false;
}

// Deterministic generator of small ground Boolean CHC systems. Always emits
// at least one query clause. Uses a local LCG so the sequence is pinned.
class BoolChcGenerator {
 public:
  explicit BoolChcGenerator(std::uint64_t seed) : state_(seed | 1) {}

  Benchmark next() {
    Benchmark b;
    b.logicName = "HORN";
    b.origin = "generated";
    const std::size_t numPreds = 1 + draw(6);   // 1..6
    const std::size_t numClauses = 1 + draw(12);  // 1..12
    for (std::size_t i = 0; i < numPreds; ++i)
      b.decls.push_back({"P" + std::to_string(i), {}});

    bool hasQuery = false;
    for (std::size_t i = 0; i < numClauses; ++i) {
      const bool isLast = i + 1 == numClauses;
      Clause c;
      const std::size_t bodySize = draw(4);  // 0..3 atoms
      for (std::size_t j = 0; j < bodySize; ++j)
        c.bodyAtoms.push_back(
            Term::predApp("P" + std::to_string(draw(numPreds)), {}));
      c.constraint = draw(5) == 0 ? Term::falseTerm() : Term::trueTerm();
      const bool query = (isLast && !hasQuery) || draw(4) == 0;
      if (query) {
        c.head = nullptr;
        hasQuery = true;
      } else {
        c.head = Term::predApp("P" + std::to_string(draw(numPreds)), {});
      }
      b.clauses.push_back(std::move(c));
    }
    return b;
  }

 private:
  std::size_t draw(std::size_t n) {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::size_t>((state_ >> 33) % n);
  }

  std::uint64_t state_;
};

}  // namespace chctk::testsupport
