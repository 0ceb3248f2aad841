#pragma once

#include <cstdint>
#include <string_view>

namespace wcdfp {

// SplitMix64 (Steele, Lea & Flood 2014; public-domain reference by Vigna).
// Chosen over std:: engines because the standard distributions are not
// bit-reproducible across library implementations, and frozen fixtures must
// replay on any platform. The generator state advances by the golden-gamma
// increment; output is the standard 64-bit finalizer.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in the open interval (0, 1): 53-bit mantissa, offset by
  // half an ulp so neither endpoint is reachable.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), Lemire multiply-shift (biased by < 2^-64,
  // irrelevant at the trial counts used here and bit-stable everywhere).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent sub-seed from (seed, purpose tag, index) by hashing
// the three through the SplitMix64 finalizer. All randomness in the toolkit
// flows from one root seed through this function.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index) {
  std::uint64_t h = seed;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    std::uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    h = z ^ (z >> 31);
  };
  for (char c : tag) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  mix(index);
  return h;
}

}  // namespace wcdfp
