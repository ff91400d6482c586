#pragma once

#include <cstdint>
#include <string>

namespace grc {

// splitmix64: tiny, well-known, and identical on every platform, which the
// byte-stable law reports depend on.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n); modulo bias is irrelevant at test scale.
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

  bool chance(int num, int den) { return below(den) < num; }

 private:
  uint64_t state_;
};

// Stable per-case seed: mixes the root seed, a textual tag, and an index.
uint64_t derive_seed(uint64_t root, const std::string& tag, int index);

}  // namespace grc
