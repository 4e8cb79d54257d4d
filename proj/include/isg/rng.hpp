#ifndef ISG_RNG_HPP
#define ISG_RNG_HPP

#include <cstdint>

namespace isg {

// Deterministic 64 bit generator with identical output on every platform;
// reports quote the seed, so reruns must reproduce streams bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n); n must be positive.
  int below(int n) {
    return static_cast<int>(next() % static_cast<uint64_t>(n));
  }

  // Uniform double in [0, 1).
  double real() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
};

}  // namespace isg

#endif
