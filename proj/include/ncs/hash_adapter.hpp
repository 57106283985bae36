#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>

#include "ncs/compressor.hpp"
#include "ncs/digest.hpp"

namespace ncs {

// Pluggable fixed-width hash: message bytes -> n-bit digest.
using HashFn = std::function<Digest(std::span<const std::uint8_t>, int)>;

// First n bits (MSB-first) of SHA-256. Requires 8 <= n <= 256.
Digest hash_n(std::span<const std::uint8_t> msg, int n);

// 16-byte message carrying a k-bit iteration state (k <= 64):
// bytes 0..7 state little-endian, 8..11 flavor, 12..15 counter.
struct MessageEncoding {
  std::uint64_t state = 0;
  std::uint32_t flavor = 0;
  std::uint32_t counter = 0;

  std::array<std::uint8_t, 16> bytes() const;
};

// f(s) = compress(hash_n(encode(s, flavor, 0), n)), deterministic in
// (compressor, n, flavor). Requires compressor.k() <= 64.
std::function<std::uint64_t(std::uint64_t)> step_function(
    const CompressorSpec& compressor, int n, std::uint32_t flavor,
    const HashFn& hash = hash_n);

}  // namespace ncs
