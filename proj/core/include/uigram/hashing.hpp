#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace uigram {

// FNV-1a, 64 bit. Used for mock-fixture keying and vocabulary digests;
// stable across platforms and toolchains.
constexpr std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (char c : data) {
    hash ^= static_cast<std::uint8_t>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view data);

}  // namespace uigram
