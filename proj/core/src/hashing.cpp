#include "distq/hashing.hpp"

#include <string>

#include "distq/error.hpp"

namespace distq {

namespace {

const unsigned char* bytes_of(std::string_view s) {
  return reinterpret_cast<const unsigned char*>(s.data());
}

void check_qgram(std::string_view x, int q) {
  if (q < 1 || q > kMaxQ) {
    throw ContractViolation("q must be in [1, 8], got " + std::to_string(q));
  }
  if (x.size() != static_cast<std::size_t>(q)) {
    throw ContractViolation("q-gram length " + std::to_string(x.size()) +
                            " does not match q = " + std::to_string(q));
  }
}

}  // namespace

RollContext::RollContext(int q) : q_(q), pow4_(0) {
  if (q < 1 || q > kMaxQ) {
    throw ContractViolation("q must be in [1, 8], got " + std::to_string(q));
  }
  std::uint32_t p = 1;
  for (int t = 1; t < q; ++t) p = (p * 4u) & 0xFFFFu;
  pow4_ = static_cast<std::uint16_t>(p);
}

Hash16 qgram_hash16(std::string_view x, int q) {
  check_qgram(x, q);
  return Hash16{detail::hash16(bytes_of(x), q)};
}

Hash8 qgram_hash8(std::string_view x, int q) {
  check_qgram(x, q);
  return Hash8{detail::hash8(bytes_of(x), q)};
}

Hash16 roll_hash16(Hash16 prev, unsigned char out_byte, unsigned char in_byte,
                   const RollContext& ctx) noexcept {
  return Hash16{detail::roll16(prev.value, out_byte, in_byte, ctx.pow4())};
}

}  // namespace distq
