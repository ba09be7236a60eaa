#pragma once

#include <cstdint>
#include <string_view>

namespace distq {

inline constexpr int kMaxQ = 8;

// Hash of a q-gram with base 4, reduced mod 2^16. Indexes HQ_Shift and dist.
struct Hash16 {
  std::uint16_t value = 0;
  friend constexpr bool operator==(Hash16, Hash16) = default;
};

// Hash of a q-gram with base 2, reduced mod 2^8. Used by the HASHq baseline.
struct Hash8 {
  std::uint8_t value = 0;
  friend constexpr bool operator==(Hash8, Hash8) = default;
};

// Precomputed leading coefficient 4^(q-1) mod 2^16 for the rolling update.
class RollContext {
 public:
  explicit RollContext(int q);

  int q() const noexcept { return q_; }
  std::uint16_t pow4() const noexcept { return pow4_; }

 private:
  int q_;
  std::uint16_t pow4_;
};

/// Base-4 q-gram hash: (4^(q-1)*x[1] + ... + 4*x[q-1] + x[q]) mod 2^16.
/// Throws ContractViolation unless 1 <= q <= 8 and x.size() == q.
Hash16 qgram_hash16(std::string_view x, int q);

/// Base-2 q-gram hash: (2^(q-1)*x[1] + ... + 2*x[q-1] + x[q]) mod 2^8.
Hash8 qgram_hash8(std::string_view x, int q);

/// Slides a 16-bit hash one byte to the right: drops `out_byte` on the left,
/// appends `in_byte` on the right.
Hash16 roll_hash16(Hash16 prev, unsigned char out_byte, unsigned char in_byte,
                   const RollContext& ctx) noexcept;

namespace detail {

// Unchecked kernels shared by the preprocessing and search loops.
inline std::uint16_t hash16(const unsigned char* p, int q) noexcept {
  std::uint32_t h = 0;
  for (int t = 0; t < q; ++t) h = ((h << 2) + p[t]) & 0xFFFFu;
  return static_cast<std::uint16_t>(h);
}

inline std::uint8_t hash8(const unsigned char* p, int q) noexcept {
  std::uint32_t h = 0;
  for (int t = 0; t < q; ++t) h = ((h << 1) + p[t]) & 0xFFu;
  return static_cast<std::uint8_t>(h);
}

inline std::uint16_t roll16(std::uint16_t prev, unsigned char out_byte,
                            unsigned char in_byte, std::uint16_t pow4) noexcept {
  // prev - pow4*out_byte, taken mod 2^16 without a negative intermediate.
  const std::uint32_t lead = (static_cast<std::uint32_t>(pow4) * out_byte) & 0xFFFFu;
  const std::uint32_t body = (prev + 0x10000u - lead) & 0xFFFFu;
  return static_cast<std::uint16_t>(((body << 2) + in_byte) & 0xFFFFu);
}

}  // namespace detail

}  // namespace distq
