#pragma once

#include <cstdint>

namespace ihull {

/// Counter-based generator: a stateless 64-bit mix of (seed, stream,
/// counter, draw). Streams are independent by construction, so parallel
/// replicates reproduce bit-exactly regardless of scheduling.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  uint64_t at(uint64_t stream, uint64_t counter, uint64_t draw = 0) const {
    uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL;
    z = mix(z + 0xd1b54a32d192ed03ULL * stream);
    z = mix(z + 0x8cb92ba72f3d8dd7ULL * counter);
    z = mix(z + 0xa24baed4963ee407ULL * draw);
    return z;
  }

  bool coin(uint64_t stream, uint64_t counter, uint64_t draw = 0) const {
    return (at(stream, counter, draw) >> 63) != 0;
  }

  /// uniform double in [0, 1)
  double uniform01(uint64_t stream, uint64_t counter, uint64_t draw = 0) const {
    return static_cast<double>(at(stream, counter, draw) >> 11) * 0x1.0p-53;
  }

  /// uniform integer in [lo, hi] (inclusive); hi - lo must fit in int64
  long uniform_int(long lo, long hi, uint64_t stream, uint64_t counter,
                   uint64_t draw = 0) const {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(at(stream, counter, draw) % span);
  }

 private:
  uint64_t seed_;
};

}  // namespace ihull
