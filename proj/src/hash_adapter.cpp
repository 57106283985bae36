#include "ncs/hash_adapter.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace ncs {

Digest hash_n(std::span<const std::uint8_t> msg, int n) {
  if (n < 8 || n > 256)
    throw std::invalid_argument("hash_n: n must be in [8, 256]");
  std::uint8_t out[EVP_MAX_MD_SIZE];
  unsigned out_len = 0;
  if (EVP_Digest(msg.data(), msg.size(), out, &out_len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("hash_n: SHA-256 failed");
  return Digest::from_bytes({out, out_len}, n);
}

std::array<std::uint8_t, 16> MessageEncoding::bytes() const {
  std::array<std::uint8_t, 16> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(state >> (8 * i));
  for (int i = 0; i < 4; ++i) b[8 + i] = static_cast<std::uint8_t>(flavor >> (8 * i));
  for (int i = 0; i < 4; ++i) b[12 + i] = static_cast<std::uint8_t>(counter >> (8 * i));
  return b;
}

std::function<std::uint64_t(std::uint64_t)> step_function(
    const CompressorSpec& compressor, int n, std::uint32_t flavor,
    const HashFn& hash) {
  if (compressor.n() != n)
    throw std::invalid_argument("step_function: compressor width != n");
  if (compressor.k() > 64)
    throw std::invalid_argument("step_function: state width > 64");
  return [compressor, n, flavor, hash](std::uint64_t s) {
    MessageEncoding enc{s, flavor, 0};
    auto msg = enc.bytes();
    return compressor.compress(hash(msg, n)).to_uint64();
  };
}

}  // namespace ncs
