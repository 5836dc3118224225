#ifndef SATAKE_RANDOM_HPP
#define SATAKE_RANDOM_HPP

// Seeded generator with a platform-independent output stream.
//
// The std:: distributions are implementation-defined, so uniform draws are
// built directly from the 64-bit stream to keep sampled instances (and the
// reports built from them) bit-identical across toolchains.

#include <cstdint>
#include <numbers>

namespace satake {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double angle() { return 2.0 * std::numbers::pi * uniform(); }

 private:
  std::uint64_t state_;
};

/// Independent per-trial seed derived from a campaign seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
  SplitMix64 mix(seed ^ (stream * 0xd1b54a32d192ed03ULL));
  mix.next();
  return mix.next();
}

}  // namespace satake

#endif  // SATAKE_RANDOM_HPP
