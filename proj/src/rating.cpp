#include "chctk/rating.hpp"

namespace chctk {

char ratingLetter(Rating r) {
  switch (r) {
    case Rating::A: return 'A';
    case Rating::B: return 'B';
    case Rating::C: return 'C';
  }
  return '?';
}

std::optional<Rating> ratingFromLetter(char c) {
  switch (c) {
    case 'A': return Rating::A;
    case 'B': return Rating::B;
    case 'C': return Rating::C;
    default: return std::nullopt;
  }
}

Rating rate(const ProbeOutcome& probe1, const ProbeOutcome& probe2) {
  if (probe1.benchmarkId != probe2.benchmarkId)
    throw Error("probe outcomes refer to different benchmarks: '" +
                probe1.benchmarkId + "' vs '" + probe2.benchmarkId + "'");
  const int solved = (probe1.solved ? 1 : 0) + (probe2.solved ? 1 : 0);
  if (solved == 2) return Rating::A;
  if (solved == 1) return Rating::B;
  return Rating::C;
}

}  // namespace chctk
