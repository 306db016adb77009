#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace chctk {

/// A 256-bit content digest. Rendered as 64 lowercase hex characters in all
/// file outputs.
struct Digest {
  std::string algorithm = "sha256";
  std::array<std::uint8_t, 32> bytes{};

  std::string hex() const;
  bool operator==(const Digest&) const = default;

  static Digest sha256(std::string_view data);
};

}  // namespace chctk
