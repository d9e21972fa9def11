#ifndef GROWTH_PRNG_HPP
#define GROWTH_PRNG_HPP

#include <cstdint>

namespace growth {

/** SplitMix64 generator.
 *
 *  This is the generator frozen in the packet wire format: the ESI of an
 *  encoded packet seeds a SplitMix64 stream that regenerates the packet's
 *  degree and neighbor set, so encoder and decoder must produce identical
 *  sequences on every platform.  All operations are exact 64-bit integer
 *  arithmetic; doubles are derived from the top 53 bits only.
 */
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /** Uniform double in [0, 1), 53-bit resolution. */
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /** Unbiased uniform integer in [0, n), by rejection. Requires n > 0. */
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

private:
  std::uint64_t state_;
};

/** Derives the seed of an independent per-trial (or per-packet) stream from a
 *  master seed.  Documented in docs/cli.md; changing it breaks reproducibility
 *  of recorded runs.
 */
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (0xA0761D6478BD642FULL * (index + 1)));
  return g.next();
}

}  // namespace growth

#endif
