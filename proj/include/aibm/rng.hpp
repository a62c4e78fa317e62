#pragma once

#include <cstdint>
#include <random>

namespace aibm {

/* SplitMix64 finalizer. Used to whiten raw seeds and to derive independent
 * substream seeds, so that per-head / per-cell work can be reordered or run
 * in parallel without changing any drawn number. */
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  uint64_t draw_u64() { return engine_(); }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n); modulo bias is negligible at graph sizes
  int uniform_int(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }

  // independent stream identified by (this stream's seed, tag)
  Rng substream(uint64_t tag) const { return Rng(mix64(seed_ ^ mix64(tag))); }
  Rng substream(uint64_t a, uint64_t b) const { return substream(a).substream(b); }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace aibm
