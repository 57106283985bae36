#include "ncs/digest.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace ncs {

namespace {
int byte_len(int width) { return (width + 7) / 8; }
}  // namespace

Digest::Digest(int width) : width_(width), bytes_(byte_len(width), 0) {
  if (width < 0) throw std::invalid_argument("Digest: negative width");
}

Digest Digest::from_bytes(std::span<const std::uint8_t> data, int width) {
  Digest d(width);
  if (static_cast<int>(data.size()) < byte_len(width))
    throw std::invalid_argument("Digest::from_bytes: not enough bytes");
  for (int i = 0; i < byte_len(width); ++i) d.bytes_[i] = data[i];
  // mask trailing bits
  if (width % 8 != 0) d.bytes_.back() &= static_cast<std::uint8_t>(0xff << (8 - width % 8));
  return d;
}

Digest Digest::from_uint64(std::uint64_t value, int width) {
  if (width > 64) throw std::invalid_argument("Digest::from_uint64: width > 64");
  Digest d(width);
  for (int i = 0; i < width; ++i)
    d.set_bit(i, (value >> (width - 1 - i)) & 1u);
  return d;
}

std::optional<Digest> Digest::from_hex(const std::string& hex, int width) {
  if (static_cast<int>(hex.size()) != 2 * byte_len(width)) return std::nullopt;
  std::vector<std::uint8_t> raw(byte_len(width));
  for (size_t i = 0; i < raw.size(); ++i) {
    auto nib = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      return -1;
    };
    int hi = nib(hex[2 * i]), lo = nib(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    raw[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return from_bytes(raw, width);
}

bool Digest::bit(int i) const {
  return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
}

void Digest::set_bit(int i, bool v) {
  std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
  if (v)
    bytes_[i / 8] |= mask;
  else
    bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
}

int Digest::distance(const Digest& other) const {
  if (width_ != other.width_)
    throw std::invalid_argument("Digest::distance: width mismatch");
  int d = 0;
  for (size_t i = 0; i < bytes_.size(); ++i)
    d += std::popcount(static_cast<unsigned>(bytes_[i] ^ other.bytes_[i]));
  return d;
}

std::uint64_t Digest::to_uint64() const {
  if (width_ > 64) throw std::logic_error("Digest::to_uint64: width > 64");
  std::uint64_t v = 0;
  for (int i = 0; i < width_; ++i) v = v << 1 | (bit(i) ? 1u : 0u);
  return v;
}

std::string Digest::hex() const {
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", b);
    out += buf;
  }
  return out;
}

}  // namespace ncs
