#include <doctest.h>

#include "chctk/io.hpp"
#include "chctk/parser.hpp"
#include "chctk/printer.hpp"
#include "chctk/transform.hpp"
#include "support/bool_oracle.hpp"
#include "support/corpus.hpp"

using namespace chctk;
using namespace chctk::testsupport;

namespace {

Benchmark parsed(const std::string& text, const std::string& origin = "test") {
  auto r = parseBenchmark(text, origin);
  REQUIRE_MESSAGE(r.ok(), text);
  return *r.benchmark;
}

// 10 clauses, 3 of them queries.
Benchmark threeQueryBenchmark() {
  return parsed(
      "(set-logic HORN)\n"
      "(declare-fun P (Int) Bool)\n"
      "(declare-fun Q (Int) Bool)\n"
      "(declare-fun R (Int) Bool)\n"
      "(assert (forall ((x Int)) (=> (= x 0) (P x))))\n"
      "(assert (forall ((x Int) (y Int)) (=> (and (P x) (= y (+ x 1))) (P y))))\n"
      "(assert (forall ((x Int)) (=> (and (P x) (> x 3)) (Q x))))\n"
      "(assert (forall ((x Int)) (=> (Q x) (R x))))\n"
      "(assert (forall ((x Int)) (=> (and (R x) (< x 0)) (P x))))\n"
      "(assert (forall ((x Int)) (=> (and (P x) (> x 100)) false)))\n"
      "(assert (forall ((x Int)) (=> (and (Q x) (> x 200)) false)))\n"
      "(assert (forall ((x Int)) (=> (and (R x) (> x 300)) false)))\n"
      "(assert (forall ((x Int) (y Int)) (=> (and (P x) (Q y)) (R y))))\n"
      "(assert (forall ((x Int)) (=> (> x 0) (P x))))\n"
      "(check-sat)\n");
}

}  // namespace

TEST_CASE("merge is the identity on single-query benchmarks") {
  auto b = parsed(readFile(testsupport::corpusFiles().front()),
                  "corpus");
  REQUIRE(b.queryCount() == 1);
  Benchmark merged = mergeQueries(b);
  CHECK(alphaEqual(b, merged));
  CHECK(printCanonical(b) == printCanonical(merged));
}

TEST_CASE("merge rewrites q queries into one") {
  Benchmark b = threeQueryBenchmark();
  REQUIRE(b.clauses.size() == 10);
  REQUIRE(b.queryCount() == 3);

  Benchmark merged = mergeQueries(b);
  CHECK(merged.queryCount() == 1);
  CHECK(merged.clauses.size() == 11);
  CHECK(merged.decls.size() == b.decls.size() + 1);

  const PredicateDecl* aux = merged.findDecl(kMergedQueryPredicate);
  REQUIRE(aux != nullptr);
  CHECK(aux->isNullary());

  // The appended clause is AUX => false.
  const Clause& last = merged.clauses.back();
  CHECK(last.isQuery());
  REQUIRE(last.bodyAtoms.size() == 1);
  CHECK(last.bodyAtoms[0]->symbol() == aux->name);

  // Former queries now conclude AUX.
  std::size_t auxHeads = 0;
  for (const auto& c : merged.clauses)
    if (c.head && c.head->symbol() == aux->name) ++auxHeads;
  CHECK(auxHeads == 3);
}

TEST_CASE("merge is idempotent") {
  Benchmark merged = mergeQueries(threeQueryBenchmark());
  Benchmark twice = mergeQueries(merged);
  CHECK(alphaEqual(merged, twice));
}

TEST_CASE("merge picks a fresh auxiliary name on collision") {
  auto b = parsed(
      "(declare-fun CHC_COMP_MERGED_QUERY (Int) Bool)\n"
      "(assert (forall ((x Int)) (=> (> x 0) (CHC_COMP_MERGED_QUERY x))))\n"
      "(assert (forall ((x Int)) (=> (CHC_COMP_MERGED_QUERY x) false)))\n"
      "(assert (forall ((x Int)) (=> (and (CHC_COMP_MERGED_QUERY x) (< x 0)) false)))\n"
      "(check-sat)\n");
  Benchmark merged = mergeQueries(b);
  CHECK(merged.findDecl("CHC_COMP_MERGED_QUERY_1") != nullptr);
  CHECK(merged.queryCount() == 1);
  CHECK(checkWellFormed(merged).empty());
}

TEST_CASE("merge requires at least one query") {
  auto b = parsed(
      "(declare-fun P (Int) Bool)\n"
      "(assert (forall ((x Int)) (=> (> x 0) (P x))))\n"
      "(check-sat)\n");
  CHECK_THROWS_AS(mergeQueries(b), Error);
  CHECK_THROWS_AS(splitQueries(b), Error);
}

TEST_CASE("split produces one single-query benchmark per query") {
  Benchmark b = threeQueryBenchmark();
  auto parts = splitQueries(b);
  REQUIRE(parts.size() == 3);
  for (const auto& p : parts) {
    CHECK(p.queryCount() == 1);
    CHECK(p.clauses.size() == 8);  // 7 non-query + 1 query
    CHECK(p.decls == b.decls);
    CHECK(checkWellFormed(p).empty());
  }
  // Outputs follow query order in the input.
  CHECK(parts[0].clauses[5].isQuery());
  CHECK(structEqual(parts[0].clauses[5].constraint,
                    b.clauses[5].constraint));
  CHECK(structEqual(parts[1].clauses[5].constraint, b.clauses[6].constraint));
  CHECK(structEqual(parts[2].clauses[5].constraint, b.clauses[7].constraint));
}

TEST_CASE("split of a single-query benchmark is a singleton identity") {
  auto b = parsed(readFile(testsupport::corpusFiles().front()), "corpus");
  auto parts = splitQueries(b);
  REQUIRE(parts.size() == 1);
  CHECK(alphaEqual(parts[0], b));
}

TEST_CASE("checksum is stable and formatting-insensitive") {
  const std::string textA =
      "(set-logic HORN)\n"
      "(declare-fun P (Int) Bool)\n"
      "(assert (forall ((x Int)) (=> (= x 3) (P x))))\n"
      "(assert (forall ((x Int)) (=> (P x) false)))\n"
      "(check-sat)\n";
  const std::string textB =
      "(set-logic HORN)  ; same benchmark, different text\n"
      "(declare-fun P (Int) Bool)\n\n"
      "(assert (forall ((renamed Int))\n"
      "   (=> (= renamed 3) (P renamed))))\n"
      "(assert (forall ((q Int)) (=> (P q) false)))\n"
      "(check-sat)\n";
  Digest a1 = checksum(parsed(textA));
  Digest a2 = checksum(parsed(textA));
  Digest b = checksum(parsed(textB));
  CHECK(a1 == a2);
  CHECK(a1 == b);
  CHECK(a1.hex().size() == 64);
  CHECK(a1.algorithm == "sha256");

  // One numeral apart: digests separate.
  const std::string textC =
      "(set-logic HORN)\n"
      "(declare-fun P (Int) Bool)\n"
      "(assert (forall ((x Int)) (=> (= x 4) (P x))))\n"
      "(assert (forall ((x Int)) (=> (P x) false)))\n"
      "(check-sat)\n";
  CHECK_FALSE(checksum(parsed(textC)) == a1);
}

TEST_CASE("dedup keeps first occurrences and reports drops") {
  CHECK(dedup({}).unique.empty());
  CHECK(dedup({}).dropped.empty());

  Benchmark b1 = parsed(readFile(testsupport::corpusFiles()[0]), "repo/b1");
  Benchmark b2 = b1;
  b2.origin = "repo/b2";
  Benchmark b3 = parsed(readFile(testsupport::corpusFiles()[1]), "repo/b3");

  auto result = dedup({b1, b2, b3});
  REQUIRE(result.unique.size() == 2);
  CHECK(result.unique[0].origin == "repo/b1");
  CHECK(result.unique[1].origin == "repo/b3");
  CHECK(result.unique[0].checksum.has_value());
  REQUIRE(result.dropped.size() == 1);
  CHECK(result.dropped[0].first == "repo/b2");
  CHECK(result.dropped[0].second == "repo/b1");
}

TEST_CASE("dedup counts match the contributed-unique bookkeeping") {
  // 69 inputs of which 3 are copies leave 66 unique.
  BoolChcGenerator gen(7);
  std::vector<Benchmark> inputs;
  while (inputs.size() < 66) {
    Benchmark b = gen.next();
    b.origin = "eldarica-misc/" + std::to_string(inputs.size());
    auto d = checksum(b).hex();
    bool fresh = true;
    for (const auto& prev : inputs)
      if (prev.checksum->hex() == d) fresh = false;
    if (!fresh) continue;
    b.checksum = checksum(b);
    inputs.push_back(std::move(b));
  }
  for (int i = 0; i < 3; ++i) {
    Benchmark copy = inputs[static_cast<std::size_t>(i) * 7];
    copy.origin = "eldarica-misc/copy" + std::to_string(i);
    copy.checksum.reset();
    inputs.push_back(std::move(copy));
  }
  auto result = dedup(inputs);
  CHECK(inputs.size() == 69);
  CHECK(result.unique.size() == 66);
  CHECK(result.dropped.size() == 3);
}

TEST_CASE("fixpoint oracle sanity") {
  auto unsat = parsed(
      "(declare-fun A () Bool)\n"
      "(assert A)\n"
      "(assert (=> A false))\n"
      "(check-sat)\n");
  CHECK(derivableFalse(unsat));

  auto sat = parsed(
      "(declare-fun A () Bool)\n"
      "(declare-fun B () Bool)\n"
      "(assert A)\n"
      "(assert (=> B false))\n"
      "(check-sat)\n");
  CHECK_FALSE(derivableFalse(sat));
}

TEST_CASE("merge and split preserve derivability on random Boolean systems") {
  BoolChcGenerator gen(20200501);
  int unsatCount = 0;
  for (int i = 0; i < 1200; ++i) {
    Benchmark b = gen.next();
    REQUIRE(b.queryCount() >= 1);
    const bool original = derivableFalse(b);
    if (original) ++unsatCount;

    CHECK(derivableFalse(mergeQueries(b)) == original);

    bool anySplitUnsat = false;
    for (const auto& part : splitQueries(b))
      anySplitUnsat = anySplitUnsat || derivableFalse(part);
    CHECK(anySplitUnsat == original);
  }
  // The generator exercises both outcomes.
  CHECK(unsatCount > 100);
  CHECK(unsatCount < 1100);
}

TEST_CASE("merged benchmarks stay well-formed and single-query") {
  BoolChcGenerator gen(99);
  for (int i = 0; i < 200; ++i) {
    Benchmark b = gen.next();
    Benchmark merged = mergeQueries(b);
    CHECK(merged.queryCount() == 1);
    CHECK(checkWellFormed(merged).empty());
    if (b.queryCount() > 1) {
      CHECK(merged.clauses.size() == b.clauses.size() + 1);
      CHECK(merged.decls.size() == b.decls.size() + 1);
    }
    for (const auto& part : splitQueries(b)) {
      CHECK(part.queryCount() == 1);
      CHECK(checkWellFormed(part).empty());
    }
  }
}
