#include "chctk/transform.hpp"

#include <map>

#include "chctk/printer.hpp"

namespace chctk {

namespace {

std::string freshAuxName(const Benchmark& b) {
  std::string name = kMergedQueryPredicate;
  int suffix = 0;
  while (b.findDecl(name) != nullptr)
    name = std::string(kMergedQueryPredicate) + "_" + std::to_string(++suffix);
  return name;
}

}  // namespace

Benchmark mergeQueries(const Benchmark& b) {
  if (b.queryCount() == 0)
    throw Error("nothing to merge: benchmark '" + b.origin +
                "' has no query clause");
  if (b.queryCount() == 1) return b;

  Benchmark out = b;
  out.checksum.reset();
  const std::string aux = freshAuxName(b);
  out.decls.push_back({aux, {}});

  Term::Ptr auxAtom = Term::predApp(aux, {});
  for (auto& c : out.clauses) {
    if (c.isQuery()) c.head = auxAtom;
  }
  Clause query;
  query.bodyAtoms.push_back(auxAtom);
  query.constraint = Term::trueTerm();
  query.head = nullptr;
  out.clauses.push_back(std::move(query));
  return out;
}

std::vector<Benchmark> splitQueries(const Benchmark& b) {
  if (b.queryCount() == 0)
    throw Error("nothing to split: benchmark '" + b.origin +
                "' has no query clause");

  std::vector<Benchmark> out;
  for (std::size_t i = 0; i < b.clauses.size(); ++i) {
    if (!b.clauses[i].isQuery()) continue;
    Benchmark part;
    part.logicName = b.logicName;
    part.decls = b.decls;
    part.origin = b.origin;
    for (std::size_t j = 0; j < b.clauses.size(); ++j) {
      if (!b.clauses[j].isQuery() || j == i) part.clauses.push_back(b.clauses[j]);
    }
    out.push_back(std::move(part));
  }
  return out;
}

Digest checksum(const Benchmark& b) {
  return Digest::sha256(printCanonical(b));
}

DedupResult dedup(const std::vector<Benchmark>& benchmarks) {
  DedupResult result;
  std::map<std::string, std::string> keptByHex;  // digest hex -> kept origin
  for (const auto& b : benchmarks) {
    Digest d = b.checksum ? *b.checksum : checksum(b);
    auto [it, inserted] = keptByHex.emplace(d.hex(), b.origin);
    if (inserted) {
      Benchmark kept = b;
      kept.checksum = d;
      result.unique.push_back(std::move(kept));
    } else {
      result.dropped.emplace_back(b.origin, it->second);
    }
  }
  return result;
}

}  // namespace chctk
