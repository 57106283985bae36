#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncs {

// Fixed-width n-bit value. Bit i lives in bit (7 - (i % 8)) of byte i/8,
// i.e. MSB-first within bytes. Unused trailing bits of the last byte are
// always zero.
class Digest {
 public:
  Digest() = default;
  explicit Digest(int width);
  static Digest from_bytes(std::span<const std::uint8_t> data, int width);
  static Digest from_uint64(std::uint64_t value, int width);
  static std::optional<Digest> from_hex(const std::string& hex, int width);

  int width() const { return width_; }
  bool bit(int i) const;
  void set_bit(int i, bool v);

  // Hamming distance; both digests must have equal width.
  int distance(const Digest& other) const;

  // First width bits packed as an integer, bit 0 most significant.
  std::uint64_t to_uint64() const;

  std::span<const std::uint8_t> bytes() const { return bytes_; }
  std::string hex() const;

  bool operator==(const Digest& other) const = default;

 private:
  int width_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace ncs
