#pragma once

#include <variant>
#include <vector>

#include "ncs/covering_code.hpp"
#include "ncs/digest.hpp"

namespace ncs {

// Truncation dropping mu fixed bit positions from an n-bit digest. The
// canonical choice drops the trailing mu bits.
struct TruncationSpec {
  int n = 0;
  int mu = 0;
  std::vector<int> dropped;  // ascending bit indices, size mu

  static TruncationSpec trailing(int n, int mu);
};

// g: Z2^n -> Z2^k, either a truncation or a covering-code decoder composed
// with its information-bit extraction.
class CompressorSpec {
 public:
  explicit CompressorSpec(TruncationSpec t);
  explicit CompressorSpec(CoveringCodeSpec c);

  int n() const;
  int k() const;
  bool is_code() const { return std::holds_alternative<CoveringCodeSpec>(impl_); }
  const CoveringCodeSpec& code() const { return std::get<CoveringCodeSpec>(impl_); }
  const TruncationSpec& truncation() const { return std::get<TruncationSpec>(impl_); }

  Digest compress(const Digest& x) const;
  Digest expand(const Digest& s) const;

 private:
  std::variant<TruncationSpec, CoveringCodeSpec> impl_;
};

}  // namespace ncs
