#pragma once

#include <cstdint>

namespace cpb {

/// SplitMix64: tiny, fast, and good enough for sampling vectors and walking
/// generator slots. Chosen over std::mt19937_64 because the whole state is
/// one word, which makes the counter-based per-trial construction below
/// trivially reproducible across platforms and worker counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n). Rejection sampling over the top of the 64-bit
  /// range keeps the distribution exactly uniform while consuming a bounded
  /// expected number of draws.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r = next();
    while (r < threshold) r = next();
    return r % n;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream for one trial of a seeded experiment.
/// Every (seed, index) pair maps to a fixed stream no matter how trials are
/// split across workers, so estimates are bit-identical for any worker count.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
  SplitMix64 mixer(seed ^ (0x5851f42d4c957f2dull * (trial_index + 1)));
  // Burn one output so that consecutive trial indices do not hand the
  // caller raw neighbouring counter values.
  return SplitMix64(mixer.next());
}

}  // namespace cpb
