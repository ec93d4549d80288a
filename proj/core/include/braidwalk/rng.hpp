#pragma once

// SplitMix64 with per-trial substreams. The stream for (seed, trial) depends
// on nothing else, so trials can run in any order or on any thread.

#include <cstdint>
#include <string_view>

namespace braidwalk {

// Pinned into every output so results can be regenerated elsewhere.
inline constexpr std::string_view kRngName = "splitmix64-substream-v1";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) {
        return x % bound;
      }
    }
  }

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return SplitMix64::mix(SplitMix64::mix(seed) ^
                         (trial * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

}  // namespace braidwalk
