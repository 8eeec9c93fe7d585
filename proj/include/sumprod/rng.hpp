#pragma once

#include <cstdint>
#include <string_view>

namespace sumprod {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/* Counter-based generator: the stream is a pure function of (key, counter),
   so substreams derived from (seed, label, index) replay identically
   regardless of evaluation order. */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : key_(mix64(seed ^ 0x5bf0f1e4d3c2b1a0ull)) {}

  Rng derive(std::string_view label, std::uint64_t index = 0) const {
    Rng r(0);
    r.key_ = mix64(key_ ^ fnv1a64(label) ^ mix64(index + 0x1234567890abcdefull));
    r.ctr_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

  /// Unbiased draw from [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t v;
    do { v = next_u64(); } while (v > limit);
    return v % n;
  }

  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

} // namespace sumprod
