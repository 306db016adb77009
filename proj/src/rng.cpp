#include "chctk/rng.hpp"

#include <string>

#include "chctk/digest.hpp"

namespace chctk {

std::uint64_t SelectionRng::below(std::uint64_t n) {
  // Reject draws outside the largest multiple of n; bias-free and
  // implementation-independent (unlike std::uniform_int_distribution).
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % n;
}

std::uint64_t deriveSubstreamSeed(std::uint64_t rootSeed,
                                  std::string_view repository, char rating) {
  std::string material;
  material.reserve(10 + repository.size());
  for (int i = 7; i >= 0; --i)
    material.push_back(static_cast<char>((rootSeed >> (8 * i)) & 0xff));
  material.append(repository);
  material.push_back(rating);
  const Digest d = Digest::sha256(material);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i)
    seed = (seed << 8) | d.bytes[static_cast<std::size_t>(i)];
  return seed;
}

}  // namespace chctk
