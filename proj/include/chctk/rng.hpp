#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace chctk {

/// Deterministic randomness for benchmark selection. Wraps std::mt19937_64
/// (whose output sequence the standard pins down exactly) and draws bounded
/// values by rejection sampling, so results are identical on every platform
/// and standard library.
class SelectionRng {
 public:
  explicit SelectionRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw from [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// Seed for one (repository, rating) substream: sha256 over the root seed and
/// the pool identity. Makes per-repository selections independent of the
/// order repositories are processed in.
std::uint64_t deriveSubstreamSeed(std::uint64_t rootSeed,
                                  std::string_view repository, char rating);

/// Fisher-Yates prefix shuffle: after the call, items[0..k) is a uniform
/// random sample without replacement (in random order).
template <typename T>
void partialShuffle(std::vector<T>& items, std::size_t k, SelectionRng& rng) {
  if (items.empty()) return;
  if (k > items.size()) k = items.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j =
        i + static_cast<std::size_t>(rng.below(items.size() - i));
    using std::swap;
    swap(items[i], items[j]);
  }
}

}  // namespace chctk
