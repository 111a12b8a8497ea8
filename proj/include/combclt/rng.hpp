#pragma once

#include <cstdint>

namespace combclt {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-derived random substream: (seed, stream) pairs give independent
// generators, so replicate r of a Monte-Carlo run always sees the same draws
// no matter how replicates are scheduled across workers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : state_(detail::mix64(seed ^ detail::mix64(stream))),
        gamma_(detail::mix64(stream + 0x632be59bd9b4e019ULL) | 1ULL) {}

  std::uint64_t next_u64() {
    state_ += gamma_;
    return detail::mix64(state_);
  }

  // Uniform on [0,1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0,1); safe input for inverse-CDF sampling.
  double next_open_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, n); rejection on the modulo bias region.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;
};

}  // namespace combclt
