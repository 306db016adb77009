#include "chctk/digest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace chctk {

std::string Digest::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Digest Digest::sha256(std::string_view data) {
  Digest d;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), d.bytes.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != d.bytes.size()) {
    throw std::runtime_error("sha256 digest computation failed");
  }
  return d;
}

}  // namespace chctk
