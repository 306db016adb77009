#pragma once

#include <optional>
#include <string_view>

namespace chctk {

/// Competition track categories. A benchmark is assigned to exactly one.
enum class Track {
  LiaNonlin,
  LiaLin,
  LiaLinArrays,
  LraTs,
  Unclassified,
};

std::string_view trackName(Track track);
std::optional<Track> trackFromName(std::string_view name);

}  // namespace chctk
