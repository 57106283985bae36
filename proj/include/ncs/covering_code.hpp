#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncs/combinatorics.hpp"
#include "ncs/digest.hpp"

namespace ncs {

// One Hamming block of length 2^m - 1 inside an n-bit digest.
struct HammingBlock {
  int m = 0;
  int length = 0;  // 2^m - 1
  int offset = 0;  // starting bit index
};

// Direct sum of Hamming codes with covering radius R (one per block) plus
// pass-through identity bits at the end.
struct CoveringCodeSpec {
  int n = 0;
  int R = 0;
  int ell = 0;
  int r = 0;
  int leftover = 0;
  int k = 0;  // compressed width, n - ell*R - r
  std::vector<HammingBlock> blocks;

  // Throws std::invalid_argument when the parameters leave no room for
  // R blocks of length >= 3.
  static CoveringCodeSpec build(int n, int R);

  // Canonical text form "n:R:ell:r".
  std::string to_string() const;
  static std::optional<CoveringCodeSpec> parse(const std::string& text);
};

// Nearest codeword of one Hamming block via syndrome decoding. Parity-check
// column of 1-indexed position j is the m-bit binary value of j; a nonzero
// syndrome s flips position s.
Digest hamming_decode_block(const Digest& x, int m);

// Per-block nearest codewords with leftover bits copied; d(x, result) <= R.
Digest code_decode(const CoveringCodeSpec& spec, const Digest& x);

// Information bits (non-power-of-two positions) of each decoded block,
// then the leftover bits. Bijective between the code and k-bit states.
Digest code_compress(const CoveringCodeSpec& spec, const Digest& x);

// Section of code_compress: the unique codeword-with-leftover mapping to s.
Digest code_expand(const CoveringCodeSpec& spec, const Digest& s);

// Distance between two independent uniform points of one radius-1 decoding
// ball, exact rationals indexed by distance 0..2.
struct BlockDistanceDistribution {
  std::array<Rational, 3> probs;
};

BlockDistanceDistribution block_distance_distribution(int m);

// P[sum of per-block fiber distances <= eps]; leftover bits contribute 0.
Rational fiber_success_probability(const CoveringCodeSpec& spec, int eps);

struct BalanceCheck {
  bool balanced = false;
  // fiber size -> number of attained outputs with that size
  std::map<std::uint64_t, std::uint64_t> histogram;
};

// Exhaustive balancedness check of an explicit map on Z2^n, n <= 24.
// codomain_size 0 treats the attained image as the codomain (decoder-style
// maps onto a code); a positive value declares the codomain explicitly, and
// unattained outputs then count as empty fibers.
BalanceCheck check_balanced(const std::function<std::uint64_t(std::uint64_t)>& g,
                            int n, std::uint64_t codomain_size = 0);

}  // namespace ncs
